from typing import List

from cosine import gp_one_multiplicity
from errors import ParseError
from families import gen_petersen, gp_is_vertex_transitive, valid_gp_steps
from .base import FamilyPredictor, Params, parse_range


def predict_gp(n: int, k: int) -> bool:
    """
    1 is simple in P(n, k) unless a divisor of n adds solutions:
    4 | n with k odd, or 5 | n with k = 2 or 3 (mod 5). Both checks apply
    when 20 | n.
    """
    if n % 4 == 0 and k % 2 == 1:
        return False
    if n % 5 == 0 and k % 5 in (2, 3):
        return False
    return True


class GeneralizedPetersenPredictor(FamilyPredictor):
    name = "gp"

    def parse_grid(self, text: str) -> List[Params]:
        """'a..b' over n with every valid k, 'n' for one n, or 'n:k' for one graph."""
        if ":" in text:
            try:
                n, k = (int(x) for x in text.split(":", 1))
            except ValueError:
                raise ParseError(f"bad gp instance {text!r}; expected 'n:k'")
            return [(n, k)]
        low, high = parse_range(text)
        return [(n, k) for n in range(max(low, 3), high + 1) for k in valid_gp_steps(n)]

    def build(self, params):
        return gen_petersen(*params)

    def predict(self, params):
        return predict_gp(*params)

    def describe(self, params):
        n, k = params
        return f"P({n},{k})"

    def extra_columns(self, params):
        n, k = params
        return {
            "gp_one_multiplicity": gp_one_multiplicity(n, k),
            "gp_is_vertex_transitive": gp_is_vertex_transitive(n, k),
        }
