from errors import UnknownFamily
from .base import FamilyPredictor

PREDICTOR_NAMES = ("f2n", "prism", "gp", "tm", "truncation")


def get_predictor(name: str) -> FamilyPredictor:
    family = name.lower().strip()

    if family == "f2n":
        from .f2n import F2nPredictor
        return F2nPredictor()

    elif family == "prism":
        from .prism import PrismPredictor
        return PrismPredictor()

    elif family == "gp":
        from .gp import GeneralizedPetersenPredictor
        return GeneralizedPetersenPredictor()

    elif family == "tm":
        from .tm import TmPredictor
        return TmPredictor()

    elif family == "truncation":
        from .truncation import TruncationPredictor
        return TruncationPredictor()

    raise UnknownFamily(f"unknown family '{name}'; choose from {', '.join(PREDICTOR_NAMES)}")
