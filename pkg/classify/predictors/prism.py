from families import prism
from .base import FamilyPredictor


def predict_prism(n: int) -> bool:
    return n % 4 != 0


class PrismPredictor(FamilyPredictor):
    name = "prism"

    def build(self, params):
        return prism(*params)

    def predict(self, params):
        return predict_prism(*params)
