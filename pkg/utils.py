# utils.py

import json
import logging
import math
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Load the .env file
load_dotenv()

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent / "spectral_config.json"

DEFAULT_TOL = 1e-9
DEFAULT_INT_TOL = 1e-6
DEFAULT_OUTPUT_DIR = "output"


def setup_logging(debug: bool = False):
    """
    Set up logging configuration.

    Args:
        debug: If True, set logging level to DEBUG, otherwise INFO
    """
    logging_level = logging.DEBUG if debug else logging.INFO

    logging.basicConfig(
        level=logging_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load the JSON configuration file.

    A missing file is not an error: built-in defaults apply and a warning is
    logged. Malformed JSON is an error.
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if not path.exists():
        logger.warning(f"No configuration file found at {path}")
        return {}
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Error parsing configuration file {path}: {e}")
        raise ValueError(f"Invalid JSON in configuration file '{path}'")


def _env_float(name: str) -> Optional[float]:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring non-numeric {name}={raw!r}")
        return None


def resolve_tolerances(config: Dict[str, Any],
                       tol: Optional[float] = None,
                       int_tol: Optional[float] = None) -> Dict[str, float]:
    """
    Pick the multiset and integer-bucketing tolerances.

    Precedence: explicit argument (the --tol / --int-tol flags), then the
    CUBIC_TOL / CUBIC_INT_TOL environment variables, then the JSON config,
    then the built-in defaults.
    """
    tolerances = config.get("tolerances", {})
    resolved_tol = tol
    if resolved_tol is None:
        resolved_tol = _env_float("CUBIC_TOL")
    if resolved_tol is None:
        resolved_tol = tolerances.get("multiset", DEFAULT_TOL)

    resolved_int_tol = int_tol
    if resolved_int_tol is None:
        resolved_int_tol = _env_float("CUBIC_INT_TOL")
    if resolved_int_tol is None:
        resolved_int_tol = tolerances.get("integer", DEFAULT_INT_TOL)

    logger.debug(f"Tolerances: multiset={resolved_tol}, integer={resolved_int_tol}")
    return {"tol": float(resolved_tol), "int_tol": float(resolved_int_tol)}


def output_dir() -> str:
    return os.getenv("CUBIC_OUTPUT_DIR", DEFAULT_OUTPUT_DIR)


def save_to_file(content: str, filename: str) -> str:
    """Save a rendered report under the output directory and return its path."""
    directory = output_dir()
    os.makedirs(directory, exist_ok=True)
    filepath = os.path.join(directory, filename)
    with open(filepath, "w", encoding="utf-8", newline="\n") as f:
        f.write(content)
    logger.info(f"Data saved to {filepath}")
    return filepath


def read_text_source(path: str) -> str:
    """Read a whole input file; '-' means stdin."""
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def tidy_float(value: float, digits: int = 12) -> float:
    """
    Round to a fixed number of significant digits for stable output.

    Values within 1e-10 of an integer are snapped to it so that eigenvalues
    like 0 or -2 do not print as solver noise; -0.0 becomes 0.0.
    """
    nearest = round(value)
    if abs(value - nearest) < 1e-10:
        value = float(nearest)
    if value == 0:
        return 0.0
    return float(f"{value:.{digits}g}")


def format_float(value: float, digits: int = 12) -> str:
    return f"{tidy_float(value, digits):.{digits}g}"


def dump_json(data: Any) -> str:
    """Render a report dict; key order is whatever order the dict was built in."""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def isclose_all(a, b, tol: float) -> bool:
    return len(a) == len(b) and all(math.isclose(x, y, rel_tol=0.0, abs_tol=tol) for x, y in zip(a, b))
