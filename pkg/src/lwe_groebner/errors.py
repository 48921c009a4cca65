"""Exception hierarchy shared by every module."""


class LweGroebnerError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(LweGroebnerError, ValueError):
    pass


class InversionOfZero(LweGroebnerError, ZeroDivisionError):
    pass


class ArityMismatch(LweGroebnerError, ValueError):
    pass


class ZeroInput(LweGroebnerError, ValueError):
    pass


class DegreeExceedsField(LweGroebnerError, ValueError):
    pass


class EmptyDomain(LweGroebnerError, ValueError):
    pass


class NeedsCutoff(LweGroebnerError, ValueError):
    pass


class DegreeTooLow(LweGroebnerError, ValueError):
    pass


class TooLarge(LweGroebnerError, ValueError):
    """A matrix or enumeration would exceed the configured size guard."""


class CapExceeded(LweGroebnerError):
    """Raised when an iterative engine reaches its degree cap.

    ``profile`` carries whatever was measured before giving up.
    """

    def __init__(self, message, profile=None):
        super().__init__(message)
        self.profile = profile if profile is not None else {}


class UnitIdeal(LweGroebnerError):
    pass


class NotZeroDimensional(LweGroebnerError):
    pass


class HypothesisViolated(LweGroebnerError, ValueError):
    pass


class DegenerateRatio(LweGroebnerError, ValueError):
    pass


class NullHint(LweGroebnerError, ValueError):
    pass


class HintTooWide(LweGroebnerError, ValueError):
    pass


class MultinomialVanishes(LweGroebnerError, ValueError):
    pass
