# errors.py

"""Domain errors raised across the package.

Every error subclasses ``CubicSpectraError`` which itself is a ``ValueError``,
so callers that only care about bad input can keep catching ``ValueError``.
The CLI prints the class name of whatever reaches it.
"""


class CubicSpectraError(ValueError):
    """Base class for all domain errors."""


# multigraph
class OutOfRange(CubicSpectraError):
    pass


class LoopEdge(CubicSpectraError):
    pass


class NotTwoRegular(CubicSpectraError):
    pass


class ParseError(CubicSpectraError):
    pass


# families
class TooSmall(CubicSpectraError):
    pass


class DegenerateStep(CubicSpectraError):
    pass


class NotCubic(CubicSpectraError):
    pass


class Disconnected(CubicSpectraError):
    pass


class UnknownFamily(CubicSpectraError):
    pass


# spectra
class BadMultiplicity(CubicSpectraError):
    pass


class ConvergenceFailure(CubicSpectraError):
    pass


# structure
class NotSimple(CubicSpectraError):
    pass


class NotPlusMinusOne(CubicSpectraError):
    pass


class NotAPartition(CubicSpectraError):
    pass


class TooLarge(CubicSpectraError):
    pass


class StructureViolation(CubicSpectraError):
    """A structural check failed on the input graph.

    ``clause`` names the failed clause, e.g. ``"perfect-matching"``.
    """

    def __init__(self, clause: str, message: str = ""):
        self.clause = clause
        super().__init__(f"[{clause}] {message}" if message else f"[{clause}]")


# maps
class InvalidRotation(CubicSpectraError):
    pass


class NonIntegerGenus(CubicSpectraError):
    pass


class DegreeTooSmall(CubicSpectraError):
    pass
