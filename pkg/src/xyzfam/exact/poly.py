"""Multivariate polynomials over Q in the fixed variables a, s, t.

Arithmetic and gcd are delegated to sympy's sparse polynomial ring
(``QQ[a,s,t]`` with lexicographic order a > s > t, gmpy2-backed
coefficients).  The square root is computed here term by term.
"""

from fractions import Fraction
from math import gcd, lcm

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import PolyElement, ring

from ..errors import DivisionByZero, InexactDivision, NotASquare, Undefined
from .rational import as_rational, format_rational, rat_sqrt

VARIABLES = ("a", "s", "t")

_RING, _A, _S, _T = ring(",".join(VARIABLES), QQ, lex)
_GENS = {"a": _A, "s": _S, "t": _T}


def _qq(value):
    q = as_rational(value)
    return QQ(q.numerator, q.denominator)


def _frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


class Poly:
    """Immutable polynomial in ``QQ[a, s, t]``.

    Supports ``+``, ``-``, ``*`` and non-negative integer powers, mixed freely
    with ``int`` and ``Fraction`` operands.

    >>> a, s, t = Poly.gens()
    >>> (s**4 - 4*a) + (3*s**4 + 4*a)
    Poly('4*s^4')
    """

    __slots__ = ("_p",)

    def __init__(self, value=0):
        if isinstance(value, Poly):
            value = value._p
        elif isinstance(value, PolyElement):
            if value.ring is not _RING:
                value = _RING(value.as_expr())
        elif isinstance(value, str):
            value = Poly.parse(value)._p
        else:
            value = _RING(_qq(value))
        object.__setattr__(self, "_p", value)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def gens():
        return tuple(Poly(_GENS[v]) for v in VARIABLES)

    @staticmethod
    def var(name: str) -> "Poly":
        try:
            return Poly(_GENS[name])
        except KeyError:
            raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}")

    @staticmethod
    def from_terms(terms) -> "Poly":
        """Build from a mapping ``{(e_a, e_s, e_t): coefficient}``."""
        return Poly(_RING.from_dict({tuple(m): _qq(c) for m, c in dict(terms).items() if c}))

    @staticmethod
    def parse(text: str) -> "Poly":
        from .text import parse_expression

        f = parse_expression(text)
        if not f.den.is_one:
            raise InexactDivision(f"{text!r} is not a polynomial")
        return f.num

    # -- inspection -------------------------------------------------------

    @property
    def element(self) -> PolyElement:
        """Underlying sympy ring element."""
        return self._p

    @property
    def is_zero(self) -> bool:
        return not self._p

    @property
    def is_one(self) -> bool:
        return self._p == 1

    @property
    def is_constant(self) -> bool:
        return self._p.is_ground

    def terms(self):
        """``[(exponents, Fraction)]`` in decreasing lex order."""
        return [(m, _frac(c)) for m, c in self._p.terms()]

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return _frac(self._p.LC)

    @property
    def leading_monomial(self):
        return self._p.LM

    def degree(self, var: str) -> int:
        return self._p.degree(_GENS[var])

    @property
    def variables(self):
        degs = self._p.degrees()
        return tuple(v for v, d in zip(VARIABLES, degs) if d > 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.leading_coefficient

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other._p
        if isinstance(other, (int, Fraction)):
            return _qq(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly(self._p - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly(o - self._p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Poly(self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(-self._p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        return Poly(self._p**n)

    def __truediv__(self, other):
        # only division by a nonzero constant stays inside the ring
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("polynomial divided by zero")
            return Poly(self._p * _qq(1 / Fraction(other)))
        return NotImplemented

    def exquo(self, other) -> "Poly":
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        o = Poly(other)
        if o.is_zero:
            raise DivisionByZero("exact division by the zero polynomial")
        try:
            return Poly(self._p.exquo(o._p))
        except ExactQuotientFailed:
            raise InexactDivision(f"{o} does not divide {self}") from None

    def gcd(self, other) -> "Poly":
        return poly_gcd(self, other)

    def sqrt(self) -> "Poly":
        return poly_sqrt(self)

    def primitive_part(self):
        """Split into ``(content, primitive)`` with integer coprime coefficients
        in ``primitive``, its leading coefficient positive, and
        ``self == content * primitive``."""
        if self.is_zero:
            return Fraction(0), self
        coeffs = [c for _, c in self.terms()]
        den = lcm(*(c.denominator for c in coeffs))
        num = 0
        for c in coeffs:
            num = gcd(num, c.numerator * (den // c.denominator))
        content = Fraction(num, den)
        if coeffs[0] < 0:
            content = -content
        return content, Poly(self._p * _qq(1 / content))

    def eval(self, at) -> Fraction:
        """Evaluate at ``{name: rational}``; every occurring variable must be bound."""
        values = []
        for v, d in zip(VARIABLES, self._p.degrees()):
            if v in at:
                values.append((_GENS[v], _qq(at[v])))
            elif d > 0:
                raise Undefined(f"variable {v} is unbound")
            else:
                values.append((_GENS[v], QQ(0)))
        return _frac(self._p.evaluate(values))

    def factor_list(self):
        """Irreducible factors over Q as ``(content, [(Poly, multiplicity)])``."""
        c, fs = self._p.factor_list()
        return _frac(c), [(Poly(f), m) for f, m in fs]

    # -- comparison & text ------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(tuple(self._p.terms()))

    def __bool__(self):
        return bool(self._p)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _monomial_text(m) -> str:
    parts = []
    for v, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical text: terms in lex order a > s > t, ``^`` for powers."""
    if p.is_zero:
        return "0"
    out = []
    for m, c in p.terms():
        mono = _monomial_text(m)
        if not mono:
            term = format_rational(c)
        elif c == 1:
            term = mono
        elif c == -1:
            term = "-" + mono
        else:
            term = f"{format_rational(c)}*{mono}"
        if out and not term.startswith("-"):
            out.append("+")
        out.append(term)
    return "".join(out)


KINDS = ("add", "sub", "mul", "div_exact")


def poly_arith(lhs, rhs, kind: str) -> Poly:
    lhs, rhs = Poly(lhs), Poly(rhs)
    if kind == "add":
        return lhs + rhs
    if kind == "sub":
        return lhs - rhs
    if kind == "mul":
        return lhs * rhs
    if kind == "div_exact":
        return lhs.exquo(rhs)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def poly_gcd(lhs, rhs) -> Poly:
    """Greatest common divisor, primitive over Z with positive leading coefficient."""
    lhs, rhs = Poly(lhs), Poly(rhs)
    if lhs.is_zero and rhs.is_zero:
        raise Undefined("gcd(0, 0) is undefined")
    g = Poly(lhs._p.gcd(rhs._p))
    return g.primitive_part()[1]


def poly_sqrt(p) -> Poly:
    """Square root with positive leading coefficient.

    Works down from the leading term: if ``p = r**2`` with the terms of ``r``
    in decreasing lex order ``r0 > r1 > ...``, the leading term of
    ``p - (r0 + ... + rk)**2`` is ``2*r0*r(k+1)``.  Each step therefore fixes
    one more term of ``r``; any mismatch proves ``p`` is not a square.
    """
    p = Poly(p)
    if p.is_zero:
        return p
    lead_m, lead_c = p.terms()[0]
    if any(e % 2 for e in lead_m) or lead_c < 0:
        raise NotASquare(f"{p} is not a square: leading term is not a square")
    try:
        root_c = rat_sqrt(lead_c)
    except NotASquare:
        raise NotASquare(f"{p} is not a square: leading coefficient {lead_c}") from None
    root_m = tuple(e // 2 for e in lead_m)
    # the root's degree in each variable is bounded by half of p's
    caps = tuple(d // 2 for d in p.element.degrees())

    r = _RING.from_dict({root_m: _qq(root_c)})
    twice_lead = 2 * _qq(root_c)
    rem = p.element - r * r
    last = root_m
    while rem:
        m = rem.LM
        nxt = tuple(x - y for x, y in zip(m, root_m))
        if any(e < 0 for e in nxt) or any(e > c for e, c in zip(nxt, caps)) or not nxt < last:
            raise NotASquare(f"{p} is not a square")
        term = _RING.from_dict({nxt: rem.LC / twice_lead})
        rem -= (2 * r + term) * term
        r += term
        last = nxt
    return Poly(r)
