"""Error types raised by the library.

Validation failures subclass ValueError, runtime aborts subclass RuntimeError,
so callers that do not care about the fine-grained type can catch the builtin.
"""


class DimensionMismatch(ValueError):
    pass


class NegativeDensity(ValueError):
    pass


class AllZero(ValueError):
    pass


class OutOfCube(ValueError):
    pass


class BadCoordinate(ValueError):
    pass


class NegativeTime(ValueError):
    pass


class BadExponent(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class NotBoolean(ValueError):
    pass


class DegenerateBias(ValueError):
    pass


class BadDeltaBar(ValueError):
    pass


class BadEta(ValueError):
    pass


class BadStage(ValueError):
    pass


class RateSingularity(RuntimeError):
    pass


class DominatingRateViolated(RuntimeError):
    pass


class NonPositiveDensity(ValueError):
    pass


class TooLarge(ValueError):
    pass


class ToleranceFailure(RuntimeError):
    pass


class SpaceMismatch(ValueError):
    pass


class EmptyFamily(ValueError):
    pass


class HypothesisViolated(UserWarning):
    """Warning category: a check was run outside its stated hypothesis."""
