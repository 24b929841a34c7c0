"""Exception types shared across the package."""


class XyzFamError(ArithmeticError):
    """Base class for every error raised by this package."""


class DivisionByZero(XyzFamError, ZeroDivisionError):
    pass


class InexactDivision(XyzFamError):
    pass


class Undefined(XyzFamError):
    pass


class NotASquare(XyzFamError, ValueError):
    pass


class NegativeInput(XyzFamError, ValueError):
    pass


class PoleAtPoint(XyzFamError, ZeroDivisionError):
    """A denominator vanishes at the requested specialization.

    ``component`` names the offending tuple component when known and
    ``factors`` lists the vanishing denominator factors in canonical text.
    """

    def __init__(self, message, component=None, factors=()):
        super().__init__(message)
        self.component = component
        self.factors = tuple(factors)


class OffCurveInput(XyzFamError, ValueError):
    pass


class SingularCurve(XyzFamError, ValueError):
    pass


class SingularQuartic(XyzFamError, ValueError):
    pass


class ExceptionalPoint(XyzFamError):
    pass


class DegenerateDenominator(XyzFamError, ZeroDivisionError):
    pass


class SymbolicDepthExceeded(XyzFamError):
    pass


class MalformedRow(XyzFamError, ValueError):
    pass


class ParseError(XyzFamError, ValueError):
    pass
