from .core import VerificationReport, VerificationRow, verify_family
from .predictors import PREDICTOR_NAMES, get_predictor, parse_range
from .predictors.f2n import predict_f2n
from .predictors.gp import predict_gp
from .predictors.prism import predict_prism
from .predictors.tm import predict_tm
from .predictors.truncation import TRUNCATION_GRAPHS, predict_truncation

__all__ = [
    "PREDICTOR_NAMES",
    "TRUNCATION_GRAPHS",
    "VerificationReport",
    "VerificationRow",
    "get_predictor",
    "parse_range",
    "predict_f2n",
    "predict_gp",
    "predict_prism",
    "predict_tm",
    "predict_truncation",
    "verify_family",
]
