import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import pandas as pd

from errors import CubicSpectraError
from exact_linalg import eigen_multiplicity
from .predictors import get_predictor
from .predictors.base import Params

logger = logging.getLogger(__name__)

STATUS_AGREE = "agree"
STATUS_DISAGREE = "DISAGREE"
STATUS_ERROR = "error"


@dataclass
class VerificationRow:
    params: Params
    label: str
    predicted: Optional[bool] = None
    multiplicity: Optional[int] = None
    error: Optional[str] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def agree(self) -> Optional[bool]:
        if self.error is not None:
            return None
        return self.predicted == (self.multiplicity == 1)

    @property
    def status(self) -> str:
        if self.error is not None:
            return STATUS_ERROR
        return STATUS_AGREE if self.agree else STATUS_DISAGREE


@dataclass
class VerificationReport:
    family: str
    grid: List[Params]
    rows: List[VerificationRow]

    @property
    def summary(self) -> Dict[str, int]:
        counts = {STATUS_AGREE: 0, STATUS_DISAGREE: 0, STATUS_ERROR: 0}
        for row in self.rows:
            counts[row.status] += 1
        return {"total": len(self.rows), "agree": counts[STATUS_AGREE],
                "disagree": counts[STATUS_DISAGREE], "error": counts[STATUS_ERROR]}

    @property
    def disagreements(self) -> List[VerificationRow]:
        return [row for row in self.rows if row.status == STATUS_DISAGREE]

    def to_frame(self) -> pd.DataFrame:
        records = []
        for row in self.rows:
            record = {
                "family": self.family,
                "instance": row.label,
                "params": " ".join(str(p) for p in row.params),
                "predicted_simple": row.predicted,
                "mult1": row.multiplicity,
            }
            record.update(row.extra)
            record["status"] = row.status
            records.append(record)
        return pd.DataFrame(records)

    def to_dict(self) -> Dict:
        return {
            "family": self.family,
            "summary": self.summary,
            "rows": [
                {
                    "instance": row.label,
                    "params": list(row.params),
                    "predicted_simple": row.predicted,
                    "mult1": row.multiplicity,
                    **row.extra,
                    "status": row.status,
                    **({"error": row.error} if row.error else {}),
                }
                for row in self.rows
            ],
        }


def verify_family(family: str, grid: Union[str, Iterable[Sequence[int]]]) -> VerificationReport:
    """
    Confront a family's predicate with the exact multiplicity of 1.

    `grid` is either range text understood by the family's predictor
    ('3..40', '20', '10:3' for gp) or an explicit list of parameter tuples.
    A domain error on one instance marks that row as errored and the sweep
    moves on.
    """
    predictor = get_predictor(family)
    params_list = predictor.parse_grid(grid) if isinstance(grid, str) else [tuple(p) for p in grid]
    logger.info(f"Verifying {predictor.name} over {len(params_list)} instance(s)")

    rows = []
    for params in params_list:
        try:
            row = VerificationRow(params=params, label=predictor.describe(params))
        except CubicSpectraError as e:
            rows.append(VerificationRow(params=params, label=str(params), error=f"{type(e).__name__}: {e}"))
            continue
        try:
            row.predicted = predictor.predict(params)
            row.multiplicity = eigen_multiplicity(predictor.build(params), 1)
            row.extra = predictor.extra_columns(params)
        except CubicSpectraError as e:
            row.error = f"{type(e).__name__}: {e}"
            logger.error(f"{row.label}: {row.error}")
        if row.status == STATUS_DISAGREE:
            logger.warning(f"{row.label}: predicted simple={row.predicted}, mult(1)={row.multiplicity}")
        else:
            logger.debug(f"{row.label}: mult(1)={row.multiplicity} [{row.status}]")
        rows.append(row)

    report = VerificationReport(family=predictor.name, grid=params_list, rows=rows)
    logger.info(f"{predictor.name}: {report.summary}")
    return report
