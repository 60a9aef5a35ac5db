from families import f2n
from .base import FamilyPredictor


def predict_f2n(n: int) -> bool:
    """1 is an eigenvalue of F_2n iff n is even, and then it is simple."""
    return n % 2 == 0


class F2nPredictor(FamilyPredictor):
    name = "f2n"

    def build(self, params):
        return f2n(*params)

    def predict(self, params):
        return predict_f2n(*params)
