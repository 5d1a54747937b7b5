"""Exception hierarchy shared by all valkit modules."""


class ValkitError(Exception):
    """Base class for every error raised by valkit."""


class ZeroDenominator(ValkitError, ZeroDivisionError):
    pass


class SquareRadicand(ValkitError, ValueError):
    """The radicand is a perfect square, so the value would be rational."""


class DegenerateImage(ValkitError, ArithmeticError):
    pass


class InternalOverflow(ValkitError, ArithmeticError):
    pass


class IndexOutOfRange(ValkitError, IndexError):
    pass


class ResourceLimit(ValkitError, ValueError):
    pass


class OddWord(ValkitError, ValueError):
    pass


class NotHyperbolic(ValkitError, ValueError):
    pass


class NonConvergence(ValkitError, ArithmeticError):
    pass


class PrecisionLoss(ValkitError, ArithmeticError):
    pass


class RealityViolation(ValkitError, ArithmeticError):
    pass


class HypothesisViolation(ValkitError, ValueError):
    """A modular function fails the arc hypotheses (real, non-negative, increasing)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class QuadratureFailure(ValkitError, ArithmeticError):
    pass


class PathSingularity(ValkitError, ArithmeticError):
    pass


class ConsistencyFailure(ValkitError, ArithmeticError):
    pass


class NotMarkovWord(ValkitError, ValueError):
    pass


class NonFinite(ValkitError, ArithmeticError):
    pass


class ParseError(ValkitError, ValueError):
    pass
