"""Exception types raised by the library."""
from __future__ import annotations


class WRTError(Exception):
    """Base class for all library errors."""


class NotCoprime(WRTError, ValueError):
    pass


class BadInput(WRTError, ValueError):
    pass


class NonPrimePower(WRTError, ValueError):
    pass


class NonInvertibleExponentDenominator(WRTError, ValueError):
    pass


class NonInvertibleDenominator(WRTError, ValueError):
    pass


class DivisionByZeroCyclo(WRTError, ZeroDivisionError):
    pass


class ZeroDenominator(WRTError, ZeroDivisionError):
    pass


class ExactDivisionFailed(WRTError, ArithmeticError):
    pass


class NonPolynomialCoefficient(WRTError, ArithmeticError):
    pass


class IntegralityViolation(WRTError, ArithmeticError):
    pass


class NonIntegerU(WRTError, ArithmeticError):
    pass


class NonConvergence(WRTError, ArithmeticError):
    pass


class SingularBasis(WRTError, ArithmeticError):
    pass


class UnsupportedLinkKind(WRTError, ValueError):
    pass


class SectorMismatch(WRTError, ValueError):
    pass


class SmallOrderUnsupported(WRTError, ValueError):
    pass
