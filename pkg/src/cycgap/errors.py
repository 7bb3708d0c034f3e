"""Exception hierarchy shared across the package."""


class CycgapError(Exception):
    """Base class for all package-specific errors."""


class CoefficientOverflow(CycgapError, OverflowError):
    """A coefficient left the configured 64-bit signed range."""


class InexactDivision(CycgapError, ArithmeticError):
    """Polynomial division left a nonzero remainder (or a non-integer quotient)."""


class NonMonicDivisor(CycgapError, ValueError):
    """Remainder computation requires a monic divisor of degree >= 1."""


class ZeroPolynomial(CycgapError, ValueError):
    """Operation undefined for the zero polynomial."""


class DegreeTooLarge(CycgapError, ValueError):
    """Input degree exceeds the window the operation acts on."""


class IndexOutOfRange(CycgapError, IndexError):
    """Block index outside 0 .. phi(m)-1."""


class CapExceeded(CycgapError, ValueError):
    """Requested n is beyond the configured size cap."""


class DegreeMismatch(CycgapError, ValueError):
    """Polynomial does not have the degree the decomposition requires."""


class NotOdd(CycgapError, ValueError):
    """m must be odd."""


class NotSquarefree(CycgapError, ValueError):
    """m must be square-free."""


class NotPrime(CycgapError, ValueError):
    """p must be prime."""


class PrimeNotLarger(CycgapError, ValueError):
    """p must be strictly larger than m."""
