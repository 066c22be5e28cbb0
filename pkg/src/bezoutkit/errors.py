"""Exception hierarchy shared by every module."""


class BezoutKitError(Exception):
    """Base class for all library errors."""


class DivisionByZero(BezoutKitError, ZeroDivisionError):
    pass


class DimensionMismatch(BezoutKitError, ValueError):
    pass


class AllZeroInput(BezoutKitError, ValueError):
    pass


class NotAntisymmetric(BezoutKitError, ValueError):
    pass


class NotASolution(BezoutKitError, ValueError):
    """A tuple failed the exact check sum_j x_j f_j = 1."""


class VerificationFailure(BezoutKitError, AssertionError):
    """An exact identity that must hold by construction did not.

    Raised only on implementation bugs, never on data conditions.
    """


class InternalVerificationFailure(VerificationFailure):
    pass


class IndexOutOfRange(BezoutKitError, IndexError):
    pass


class ParseError(BezoutKitError, ValueError):
    pass
