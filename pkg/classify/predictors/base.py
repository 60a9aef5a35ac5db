from abc import ABC, abstractmethod
from typing import Dict, List, Tuple

from errors import ParseError
from multigraph import Multigraph

Params = Tuple[int, ...]


def parse_range(text: str) -> Tuple[int, int]:
    """'a..b' (inclusive) or a single integer 'a'."""
    text = text.strip()
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            bounds = int(low), int(high)
        else:
            bounds = int(text), int(text)
    except ValueError:
        raise ParseError(f"bad range {text!r}; expected 'a..b' or 'a'")
    if bounds[0] > bounds[1]:
        raise ParseError(f"empty range {text!r}")
    return bounds


class FamilyPredictor(ABC):
    """One graph family: how to enumerate it, build it and predict simplicity of 1."""

    name: str = ""

    def parse_grid(self, text: str) -> List[Params]:
        """Default grid: a one-parameter range."""
        low, high = parse_range(text)
        return [(value,) for value in range(low, high + 1)]

    @abstractmethod
    def build(self, params: Params) -> Multigraph:
        """Graph whose multiplicity of 1 is tested."""

    @abstractmethod
    def predict(self, params: Params) -> bool:
        """True iff 1 is predicted to be a simple eigenvalue."""

    def describe(self, params: Params) -> str:
        return f"{self.name}({', '.join(str(p) for p in params)})"

    def extra_columns(self, params: Params) -> Dict:
        return {}
