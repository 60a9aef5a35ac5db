from families import t_m
from .base import FamilyPredictor


def predict_tm(m: int) -> bool:
    return m % 4 != 0 and m % 5 != 0


class TmPredictor(FamilyPredictor):
    name = "tm"

    def build(self, params):
        return t_m(*params)

    def predict(self, params):
        return predict_tm(*params)
