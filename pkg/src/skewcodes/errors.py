"""Exception hierarchy shared by every skewcodes module."""


class SkewCodesError(Exception):
    """Base class for all errors raised by this package."""


class NonPrimeCharacteristic(SkewCodesError, ValueError):
    pass


class ReducibleModulus(SkewCodesError, ValueError):
    pass


class DegreeMismatch(SkewCodesError, ValueError):
    pass


class InvalidElement(SkewCodesError, ValueError):
    """An integer encoding outside ``range(q)``."""


class FieldMismatch(SkewCodesError, ValueError):
    pass


class ZeroInverse(SkewCodesError, ZeroDivisionError):
    pass


class ZeroArgument(SkewCodesError, ValueError):
    pass


class ExponentOutOfRange(SkewCodesError, ValueError):
    pass


class AutomorphismMismatch(SkewCodesError, ValueError):
    pass


class DivisionByZero(SkewCodesError, ZeroDivisionError):
    pass


class ZeroConstant(SkewCodesError, ValueError):
    pass


class NotARightDivisor(SkewCodesError, ValueError):
    pass


class ZeroGenerator(SkewCodesError, ValueError):
    pass


class ZeroDimensional(SkewCodesError, ValueError):
    pass


class LengthMismatch(SkewCodesError, ValueError):
    pass


class WitnessConditionViolated(SkewCodesError, ValueError):
    pass


class EnumerationBudgetExceeded(SkewCodesError, RuntimeError):
    """Brute-force work would exceed the configured budget."""


class HypothesisWarning(UserWarning):
    """A structural check ran outside the hypotheses of the result it checks."""
