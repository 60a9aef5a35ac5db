from .base import FamilyPredictor, parse_range
from .factory import PREDICTOR_NAMES, get_predictor

__all__ = ["FamilyPredictor", "PREDICTOR_NAMES", "get_predictor", "parse_range"]
