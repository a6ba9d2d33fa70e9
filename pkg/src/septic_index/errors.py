"""Exception hierarchy shared by every layer of the package."""


class SepticIndexError(Exception):
    """Base class for all errors raised by this package."""


class ZeroInput(SepticIndexError, ValueError):
    pass


class DegenerateInput(SepticIndexError, ValueError):
    """Input outside the domain (b = 0, D = 0, zero polynomial, ...)."""


class InvalidPhi(SepticIndexError, ValueError):
    pass


class InvalidPrime(SepticIndexError, ValueError):
    pass


class NotPIntegral(SepticIndexError, ValueError):
    pass


class BudgetExceeded(SepticIndexError, RuntimeError):
    pass


class DegenerateFactor(SepticIndexError):
    """A lifted factor divides f exactly over Q, so f is reducible."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class UnsupportedPsi(SepticIndexError):
    pass


class Unresolved(SepticIndexError, RuntimeError):
    """The splitting engine ran out of budget or depth."""

    def __init__(self, message, p=None):
        super().__init__(message)
        self.p = p


class IncompleteInput(SepticIndexError, ValueError):
    pass
