# spectra.py

"""
Closed-form spectra, a floating eigensolver used as a cross-check, and
spectrum reports that combine exact integer multiplicities with the numeric
eigenvalue list.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Sequence, Tuple

import numpy as np

from errors import BadMultiplicity, ConvergenceFailure, OutOfRange
from exact_linalg import eigen_multiplicity
from multigraph import Multigraph, max_degree
from utils import DEFAULT_INT_TOL, DEFAULT_TOL, format_float, tidy_float

logger = logging.getLogger(__name__)


class SpectrumSource(Enum):
    EXACT_RANK = "exact-rank"
    CLOSED_FORM = "closed-form"
    NUMERIC = "numeric"


@dataclass
class SpectrumReport:
    """Numeric eigenvalues plus exact multiplicities at the integer candidates."""
    n: int
    edges: List[Tuple[int, int]]
    integer_eigs: List[Tuple[int, int]]
    numeric_eigs: List[float]
    source: SpectrumSource = SpectrumSource.EXACT_RANK
    mismatches: List[int] = field(default_factory=list)

    def multiplicity(self, lam: int) -> int:
        return dict(self.integer_eigs).get(lam, 0)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "edges": [[u, v] for u, v in self.edges],
            "integer_eigs": [{"lambda": lam, "multiplicity": mult} for lam, mult in self.integer_eigs],
            "numeric_eigs": [format_float(x) for x in self.numeric_eigs],
            "source": self.source.value,
        }


def adjacency_array(g: Multigraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=float)
    for u, v in g.edges:
        a[u, v] += 1.0
        a[v, u] += 1.0
    return a


def numeric_spectrum(g: Multigraph, tol: float = DEFAULT_TOL) -> List[float]:
    """
    All eigenvalues of the adjacency matrix, ascending.

    Raises:
        ConvergenceFailure: the solver failed, or some eigenpair has a
            residual larger than tol * n
    """
    if g.n == 0:
        return []
    a = adjacency_array(g)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as e:
        raise ConvergenceFailure(f"symmetric eigensolver failed: {e}")
    residual = float(np.max(np.linalg.norm(a @ vectors - vectors * values, axis=0)))
    if residual > tol * g.n:
        raise ConvergenceFailure(f"eigenpair residual {residual:.3e} exceeds {tol * g.n:.3e}")
    return sorted(float(x) for x in values)


# ---------------------------
# Closed forms
# ---------------------------

def _cos_ratio(j: int, n: int) -> float:
    return math.cos(2 * math.pi * j / n)


def cycle_closed_spectrum(n: int) -> List[float]:
    return sorted(2 * _cos_ratio(j, n) for j in range(n))


def f2n_closed_spectrum(n: int) -> List[float]:
    values = []
    for j in range(n):
        root = math.sqrt(4 * _cos_ratio(j, n) + 5)
        values.extend([root, -root])
    return sorted(values)


def prism_closed_spectrum(n: int) -> List[float]:
    values = []
    for j in range(n):
        c = 2 * _cos_ratio(j, n)
        values.extend([c + 1, c - 1])
    return sorted(values)


def gp_quadratic_roots(n: int, k: int) -> List[Tuple[int, float, float]]:
    """
    Per j, the two roots of x^2 - (a + b)x + ab - 1 with a = 2cos(2pi j/n),
    b = 2cos(2pi jk/n). The discriminant (a - b)^2 + 4 is always positive.
    """
    rows = []
    for j in range(n):
        a = 2 * _cos_ratio(j, n)
        b = 2 * _cos_ratio(j * k, n)
        root = math.sqrt((a - b) ** 2 + 4)
        rows.append((j, (a + b + root) / 2, (a + b - root) / 2))
    return rows


def gp_closed_spectrum(n: int, k: int) -> List[float]:
    values = []
    for _, high, low in gp_quadratic_roots(n, k):
        values.extend([high, low])
    return sorted(values)


def tm_closed_spectrum(m: int) -> List[float]:
    values = []
    for j in range(m):
        cj = _cos_ratio(j, m)
        for ell in range(m):
            cl = _cos_ratio(ell, m)
            root = math.sqrt((cj - cl) ** 2 + 1)
            values.extend([cj + cl + root, cj + cl - root])
    return sorted(values)


def truncation_closed_spectrum(mu: Sequence[float], n: int) -> List[float]:
    """
    Spectrum of the truncation of a cubic multigraph with spectrum mu.

    Each mu_i gives (1 +- sqrt(4 mu_i + 13)) / 2; on top of that -2 and 0
    each appear n/2 times.

    Raises:
        BadMultiplicity: n is odd or mu does not have n entries
        OutOfRange: some mu_i < -13/4
    """
    if n % 2 or len(mu) != n:
        raise BadMultiplicity(f"need an even n matching len(mu); got n={n}, len(mu)={len(mu)}")
    values = []
    for x in mu:
        disc = 4 * x + 13
        if disc < 0:
            raise OutOfRange(f"eigenvalue {x} is below -13/4")
        root = math.sqrt(disc)
        values.extend([(1 + root) / 2, (1 - root) / 2])
    values.extend([-2.0] * (n // 2))
    values.extend([0.0] * (n // 2))
    return sorted(values)


def simple_eigenvalue_candidates(k: int) -> List[int]:
    """The values k - 2a, a = 0..k: the only eigenvalues a +-1 vector can carry on a k-regular graph."""
    return [k - 2 * alpha for alpha in range(k + 1)]


def multisets_match(a: Sequence[float], b: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    if len(a) != len(b):
        return False
    return all(abs(x - y) <= tol for x, y in zip(sorted(a), sorted(b)))


def count_near(values: Sequence[float], target: float, tol: float) -> int:
    return sum(1 for x in values if abs(x - target) <= tol)


def spectrum_report(g: Multigraph, tol: float = DEFAULT_TOL, int_tol: float = DEFAULT_INT_TOL) -> SpectrumReport:
    """
    Numeric spectrum plus exact multiplicities at every integer in [-D, D],
    D the maximum degree. Integers where the numeric count disagrees with the
    exact one are logged and listed in `mismatches`.
    """
    numeric = numeric_spectrum(g, tol)
    bound = max_degree(g)
    integer_eigs = []
    mismatches = []
    for lam in range(-bound, bound + 1):
        mult = eigen_multiplicity(g, lam)
        if mult:
            integer_eigs.append((lam, mult))
        if count_near(numeric, lam, int_tol) != mult:
            logger.warning(f"Numeric count near {lam} disagrees with exact multiplicity {mult}")
            mismatches.append(lam)
    return SpectrumReport(
        n=g.n,
        edges=list(g.edges),
        integer_eigs=integer_eigs,
        numeric_eigs=[tidy_float(x) for x in numeric],
        source=SpectrumSource.EXACT_RANK,
        mismatches=mismatches,
    )
