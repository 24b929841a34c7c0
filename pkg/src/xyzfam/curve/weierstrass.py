"""Long-form Weierstrass curves and the chord-tangent group law.

Coefficients and coordinates may be ``Fraction`` or ``RationalFunction``;
the formulas only use field operations, so the same code serves both.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..errors import OffCurveInput, ParseError, SingularCurve, SymbolicDepthExceeded
from ..exact import RationalFunction, format_rational, parse_expression

#: default bound on |n| for scalar multiplication over Q(a, s, t)
SYMBOLIC_CAP = 4


def is_symbolic(value) -> bool:
    return isinstance(value, RationalFunction) and not value.is_constant


def specialize_value(value, at):
    if isinstance(value, RationalFunction):
        return value.eval(at)
    return Fraction(value)


def format_value(value) -> str:
    if isinstance(value, RationalFunction):
        return str(value)
    return format_rational(Fraction(value))


def parse_value(text: str, symbolic: bool = True):
    f = parse_expression(text)
    if symbolic:
        return f
    if not f.is_constant:
        raise ParseError(f"expected a rational constant, got {text!r}")
    return f.constant_value()


@dataclass(frozen=True)
class Point:
    """Affine point ``(x, y)``; ``INFINITY`` has both coordinates ``None``."""

    x: Any = None
    y: Any = None

    def __post_init__(self):
        if isinstance(self.x, int):
            object.__setattr__(self, "x", Fraction(self.x))
        if isinstance(self.y, int):
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def specialize(self, at) -> "Point":
        if self.is_infinity:
            return self
        return Point(specialize_value(self.x, at), specialize_value(self.y, at))

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({format_value(self.x)}, {format_value(self.y)})"

    @classmethod
    def parse(cls, text: str, symbolic: bool = True) -> "Point":
        text = text.strip()
        if text in ("O", "Infinity", "inf"):
            return INFINITY
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError(f"point must look like '(X, Y)': {text!r}")
        body = text[1:-1]
        depth, cut = 0, None
        for i, ch in enumerate(body):
            depth += ch == "("
            depth -= ch == ")"
            if ch == "," and depth == 0:
                cut = i
        if cut is None:
            raise ParseError(f"point must have two coordinates: {text!r}")
        return cls(parse_value(body[:cut], symbolic), parse_value(body[cut + 1 :], symbolic))


INFINITY = Point()


@dataclass(frozen=True)
class WeierstrassCurve:
    """Y^2 + a1*X*Y + a3*Y = X^3 + a2*X^2 + a4*X + a6."""

    a1: Any
    a3: Any
    a2: Any
    a4: Any
    a6: Any
    check: bool = True

    def __post_init__(self):
        for name in ("a1", "a3", "a2", "a4", "a6"):
            if isinstance(getattr(self, name), int):
                object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.check and self.discriminant == 0:
            raise SingularCurve(f"singular curve {self}")

    @property
    def coefficients(self):
        """``(a1, a2, a3, a4, a6)`` in the conventional order."""
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def symbolic(self) -> bool:
        return any(is_symbolic(c) for c in self.coefficients)

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.coefficients
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants
        return b2 * b2 - 24 * b4, -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def specialize(self, at) -> "WeierstrassCurve":
        """Curve over Q obtained by substituting numeric parameters."""
        return WeierstrassCurve(*(specialize_value(c, at) for c in (self.a1, self.a3, self.a2, self.a4, self.a6)))

    def lhs_minus_rhs(self, pt: Point):
        x, y = pt.x, pt.y
        return y * y + self.a1 * x * y + self.a3 * y - (x * x * x + self.a2 * x * x + self.a4 * x + self.a6)

    def contains(self, pt: Point) -> bool:
        return pt.is_infinity or self.lhs_minus_rhs(pt) == 0

    def neg(self, pt: Point) -> Point:
        if pt.is_infinity:
            return pt
        return Point(pt.x, -pt.y - self.a1 * pt.x - self.a3)

    def add(self, p: Point, q: Point) -> Point:
        for pt in (p, q):
            if not self.contains(pt):
                raise OffCurveInput(f"{pt} is not on {self}")
        return self._add(p, q)

    def _add(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        a1, a2, a3, a4, _ = self.coefficients
        if p.x == q.x:
            if p.y + q.y + a1 * q.x + a3 == 0:
                return INFINITY
            # tangent
            lam = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / (2 * p.y + a1 * p.x + a3)
        else:
            lam = (q.y - p.y) / (q.x - p.x)
        nu = p.y - lam * p.x
        x3 = lam * lam + a1 * lam - a2 - p.x - q.x
        y3 = -(lam + a1) * x3 - nu - a3
        return Point(x3, y3)

    def double(self, p: Point) -> Point:
        return self.add(p, p)

    def multiples(self, p: Point, n: int):
        """``[P, 2P, ..., nP]`` by repeated addition; no cap, no validation."""
        out, acc = [], INFINITY
        for _ in range(n):
            acc = self._add(acc, p)
            out.append(acc)
        return out

    def mul(self, n: int, p: Point, cap: int | None = SYMBOLIC_CAP) -> Point:
        if not self.contains(p):
            raise OffCurveInput(f"{p} is not on {self}")
        symbolic = self.symbolic or (not p.is_infinity and (is_symbolic(p.x) or is_symbolic(p.y)))
        if symbolic and cap is not None and abs(n) > cap:
            raise SymbolicDepthExceeded(f"|n| = {abs(n)} exceeds the symbolic cap {cap}")
        if n == 0 or p.is_infinity:
            return INFINITY
        acc = self.multiples(p, abs(n))[-1]
        return acc if n > 0 else self.neg(acc)

    def __str__(self):
        names = ("a1", "a2", "a3", "a4", "a6")
        return "; ".join(f"{k}={format_value(v)}" for k, v in zip(names, self.coefficients))

    @classmethod
    def parse(cls, text: str, symbolic: bool = True) -> "WeierstrassCurve":
        """Inverse of ``str``: ``"a1=...; a2=...; a3=...; a4=...; a6=..."``."""
        values = {}
        for part in text.split(";"):
            if not part.strip():
                continue
            key, _, expr = part.partition("=")
            key = key.strip()
            if key not in ("a1", "a2", "a3", "a4", "a6") or not expr.strip():
                raise ParseError(f"bad curve coefficient {part!r}")
            values[key] = parse_value(expr, symbolic)
        zero = RationalFunction() if symbolic else Fraction(0)
        get = lambda k: values.get(k, zero)  # noqa: E731
        return cls(get("a1"), get("a3"), get("a2"), get("a4"), get("a6"))


def on_curve(curve: WeierstrassCurve, pt: Point) -> bool:
    return curve.contains(pt)


def group_add(curve: WeierstrassCurve, p: Point, q: Point) -> Point:
    return curve.add(p, q)


def scalar_mul(curve: WeierstrassCurve, n: int, p: Point, cap: int | None = SYMBOLIC_CAP) -> Point:
    return curve.mul(n, p, cap=cap)
