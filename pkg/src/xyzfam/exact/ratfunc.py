"""Reduced rational functions in Q(a, s, t)."""

from fractions import Fraction

from ..errors import DivisionByZero, NotASquare, PoleAtPoint
from .poly import Poly, poly_sqrt
from .rational import rat_sqrt


def _cofactors(p: Poly, q: Poly):
    h, cp, cq = p.element.cofactors(q.element)
    return Poly(h), Poly(cp), Poly(cq)


class RationalFunction:
    """Quotient ``num/den`` of coprime polynomials in canonical form.

    The denominator has coprime integer coefficients and a positive leading
    coefficient (lex order a > s > t); the numerator carries the rational
    content and the sign.  Canonical form is unique, so ``==`` compares
    representations directly.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction):
            if not (isinstance(den, int) and den == 1):
                num = num / RationalFunction(den)
                return self._set(num.num, num.den)
            return self._set(num.num, num.den)
        num, den = Poly(num), Poly(den)
        if den.is_zero:
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero:
            return self._set(num, Poly(1))
        if not den.is_constant:
            _, num, den = _cofactors(num, den)
        self._set(*_normalize(num, den))

    def _set(self, num, den):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _reduced(cls, num: Poly, den: Poly) -> "RationalFunction":
        # caller guarantees gcd(num, den) = 1
        self = object.__new__(cls)
        if num.is_zero:
            self._set(num, Poly(1))
        else:
            self._set(*_normalize(num, den))
        return self

    @staticmethod
    def gens():
        return tuple(RationalFunction(g) for g in Poly.gens())

    @staticmethod
    def var(name: str) -> "RationalFunction":
        return RationalFunction(Poly.var(name))

    @staticmethod
    def parse(text: str) -> "RationalFunction":
        from .text import parse_expression

        return parse_expression(text)

    # -- inspection -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_one

    @property
    def variables(self):
        vs = set(self.num.variables) | set(self.den.variables)
        return tuple(v for v in ("a", "s", "t") if v in vs)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def degree(self, var: str) -> int:
        """max of numerator and denominator degree in ``var``."""
        return max(self.num.degree(var), self.den.degree(var))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _add(o, -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalFunction()
            return RationalFunction._reduced(self.num * other, self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return RationalFunction._reduced(self.num / other, self.den)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _mul(o, self.inverse())

    def __neg__(self):
        return RationalFunction._reduced(-self.num, self.den)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise ValueError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._reduced(self.num**n, self.den**n)

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise DivisionByZero("inverse of the zero rational function")
        return RationalFunction._reduced(self.den, self.num)

    def sqrt(self) -> "RationalFunction":
        return ratfunc_sqrt(self)

    def eval(self, at) -> Fraction:
        """Exact value at ``{name: rational}``; raises ``PoleAtPoint`` on a pole."""
        d = self.den.eval(at)
        if d == 0:
            raise PoleAtPoint(f"denominator {self.den} vanishes at {_fmt_at(at)}")
        return self.num.eval(at) / d

    # -- comparison & text ------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.is_one and self.num.is_constant:
            return hash(self.num.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        from .text import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def _normalize(num: Poly, den: Poly):
    content, den = den.primitive_part()
    return num / content, den


def _add(x: RationalFunction, y: RationalFunction) -> RationalFunction:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if x.den.is_one and y.den.is_one:
        return RationalFunction._reduced(x.num + y.num, x.den)
    g, bx, by = _cofactors(x.den, y.den)
    num = x.num * by + y.num * bx
    if g.is_constant:
        return RationalFunction._reduced(num, x.den * by)
    h, num, g = _cofactors(num, g)
    return RationalFunction._reduced(num, bx * by * g)


def _mul(x: RationalFunction, y: RationalFunction) -> RationalFunction:
    if x.is_zero or y.is_zero:
        return RationalFunction()
    _, xn, yd = _cofactors(x.num, y.den)
    _, yn, xd = _cofactors(y.num, x.den)
    return RationalFunction._reduced(xn * yn, xd * yd)


def _fmt_at(at) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(at.items()))


KINDS = ("add", "sub", "mul", "div")


def ratfunc_arith(lhs, rhs, kind: str) -> RationalFunction:
    lhs, rhs = RationalFunction(lhs), RationalFunction(rhs)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div":
        return lhs / rhs
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def ratfunc_eval(f, at) -> Fraction:
    return RationalFunction(f).eval(at)


def ratfunc_sqrt(f) -> RationalFunction:
    """Square root whose numerator has a positive leading coefficient."""
    f = RationalFunction(f)
    if f.is_zero:
        return f
    # f = N/D in lowest terms is a square iff N = c*n^2, D = c*d^2
    lc_num = f.num.leading_coefficient
    lc_den = f.den.leading_coefficient
    try:
        scale = rat_sqrt(lc_num / lc_den) if lc_num > 0 else None
    except NotASquare:
        scale = None
    if scale is None:
        raise NotASquare(f"{f} is not a square: leading coefficient ratio {lc_num / lc_den}")
    n = poly_sqrt(f.num / lc_num)
    d = poly_sqrt(f.den / lc_den)
    return RationalFunction._reduced(n * scale, d)
