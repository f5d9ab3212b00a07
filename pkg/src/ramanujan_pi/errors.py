"""Exception types raised across the package."""


class RamanujanPiError(Exception):
    """Base class for all package errors."""


class DivisionByZero(RamanujanPiError, ZeroDivisionError):
    pass


class NegativeInput(RamanujanPiError, ValueError):
    pass


class PoleEncountered(RamanujanPiError, ValueError):
    """A shifted factorial or Gamma argument hit a pole."""


class PoleInSummand(RamanujanPiError, ValueError):
    """A terminating series has a vanishing denominator at some index.

    ``index`` is the summation index where the zero factor appears and
    ``parameter`` the denominator parameter responsible.
    """

    def __init__(self, message, index=None, parameter=None):
        super().__init__(message)
        self.index = index
        self.parameter = parameter


class IrreducibleResidue(RamanujanPiError, ValueError):
    pass


class ConstraintViolation(RamanujanPiError, ValueError):
    pass


class ThresholdNotReached(RamanujanPiError, ValueError):
    pass


class NoMatch(RamanujanPiError, LookupError):
    pass
