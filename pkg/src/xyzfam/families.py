"""Ansatz schemes and the curve-driven solution families.

Three schemes are supported:

``euler3``
    x = c1 a s^s1 t^t1 A^2/(BC),  y = c2 s^s2 t^t2 B^2/(AC),  z = c3 s^s3 t^t3 C/B
``elkies3``
    x = c1 s^s1 t^t1 A^2/C,  y = c2 a s^s2 t^t2 B^2/(AC),  z = c3 s^s3 t^t3 C/B
``fourvar``
    w = c1 a t^t1/(ABC),  x = c2 t^t2 B/A,  y = c3 t^t3 A/C,  z = c4 t^t4 C/B

Substituting an ansatz into ``prod * sum = a`` leaves a constraint that is
quadratic in C.  A family member is produced by taking the multiple nP of the
scheme's base point, reading off (A, B) from it and solving for C.
"""

import json
from math import gcd, lcm
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .curve import (
    SYMBOLIC_CAP,
    Point,
    QuarticModel,
    WeierstrassCurve,
    quartic_to_weierstrass,
)
from .curve.weierstrass import format_value
from .errors import DegenerateDenominator, ExceptionalPoint, NotASquare, PoleAtPoint
from .exact import Poly, RationalFunction, parse_expression, rat_sqrt, ratfunc_sqrt

SCHEMES = ("euler3", "elkies3", "fourvar")
ALIASES = {"euler": "euler3", "elkies": "elkies3", "fourvar": "fourvar", "appendix": "fourvar"}

# (A, B, C) exponents of each component, per scheme
_ABC_EXPONENTS = {
    "euler3": ((2, -1, -1), (-1, 2, -1), (0, -1, 1)),
    "elkies3": ((2, 0, -1), (-1, 2, -1), (0, -1, 1)),
    "fourvar": ((-1, -1, -1), (-1, 1, 0), (1, 0, -1), (0, -1, 1)),
}
# which components carry an extra factor of a
_A_FACTOR = {
    "euler3": (True, False, False),
    "elkies3": (False, True, False),
    "fourvar": (True, False, False, False),
}
_COMPONENT_NAMES = {3: ("x", "y", "z"), 4: ("w", "x", "y", "z")}
_SCHEME_VARIABLES = {"euler3": ("a", "s", "t"), "elkies3": ("a", "s"), "fourvar": ("a", "t")}


def canonical_scheme(name: str) -> str:
    """Map CLI-style names (``euler``, ``elkies``, ``appendix``) to scheme tags."""
    scheme = ALIASES.get(name, name)
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {name!r}; expected one of {sorted(ALIASES)}")
    return scheme


@dataclass(frozen=True)
class AnsatzConfig:
    scheme: str
    coefficients: tuple
    s_exponents: tuple
    t_exponents: tuple

    def __post_init__(self):
        scheme = canonical_scheme(self.scheme)
        object.__setattr__(self, "scheme", scheme)
        k = len(_ABC_EXPONENTS[scheme])
        object.__setattr__(self, "coefficients", tuple(Fraction(c) for c in self.coefficients))
        for name in ("coefficients", "s_exponents", "t_exponents"):
            if len(getattr(self, name)) != k:
                raise ValueError(f"{scheme} needs {k} {name}")

    @classmethod
    def default(cls, scheme: str) -> "AnsatzConfig":
        scheme = canonical_scheme(scheme)
        if scheme == "euler3":
            return cls(scheme, (6, Fraction(3, 2), Fraction(2, 3)), (1, 5, -3), (3, -1, -1))
        if scheme == "elkies3":
            return cls(scheme, (Fraction(1, 2), 2, Fraction(1, 2)), (-3, -3, 1), (0, 0, 0))
        return cls(scheme, (1, 1, 1, 1), (0, 0, 0, 0), (1, 1, 1, 1))

    @property
    def arity(self) -> int:
        return len(self.coefficients)

    def prefactors(self):
        """Rational-function factor of each component, excluding A, B, C."""
        a, s, t = RationalFunction.gens()
        out = []
        for c, es, et, has_a in zip(self.coefficients, self.s_exponents, self.t_exponents, _A_FACTOR[self.scheme]):
            f = s**es * t**et * c
            out.append(f * a if has_a else f)
        return tuple(out)

    def components(self, A, B, C, at=None):
        """Evaluate the ansatz at field values of A, B, C.

        With ``at`` the parameters are numeric and A, B, C are rationals.
        """
        vals = (A, B, C)
        out = []
        for pre, exps in zip(self.prefactors(), _ABC_EXPONENTS[self.scheme]):
            term = pre if at is None else pre.eval(at)
            for v, e in zip(vals, exps):
                if e:
                    term = term * v**e
            out.append(term)
        return tuple(out)


class ABCPolynomial:
    """Laurent polynomial in A, B, C with coefficients in Q(a, s, t)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: RationalFunction(c) for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls({tuple(exps): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ABCPolynomial(out)

    def __neg__(self):
        return ABCPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ABCPolynomial):
            return ABCPolynomial({m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return ABCPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ABCPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, A, B, C):
        total = 0
        for (i, j, k), c in self.terms.items():
            total = total + c * A**i * B**j * C**k
        return total

    def coefficients_in_C(self):
        """``{k: ABCPolynomial in A, B}`` grouping terms by the power of C."""
        out = {}
        for (i, j, k), c in self.terms.items():
            out.setdefault(k, {})[(i, j, 0)] = c
        return {k: ABCPolynomial(v) for k, v in out.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(f"{v}^{e}" if e != 1 else v for v, e in zip("ABC", m) if e)
            ctext = format_value(c)
            if not mono:
                term = ctext
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            elif c.is_polynomial and len(c.num.terms()) == 1:
                term = f"{ctext}*{mono}"
            else:
                term = f"({ctext})*{mono}"
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)

    def __repr__(self):
        return f"ABCPolynomial({str(self)!r})"


def _normalize_constraint(poly: ABCPolynomial) -> ABCPolynomial:
    # clear negative exponents of A, B, C
    shift = [max(0, -min(m[i] for m in poly.terms)) for i in range(3)]
    poly = poly * ABCPolynomial.monomial(shift)
    # clear coefficient denominators, then divide out the common polynomial content
    den = Poly(1)
    for c in poly.terms.values():
        den = den * c.den.exquo(den.gcd(c.den))
    nums = [(c * RationalFunction(den)).num for c in poly.terms.values()]
    content = nums[0]
    for p in nums[1:]:
        content = content.gcd(p)
    scale = RationalFunction(den) / RationalFunction(content)
    poly = poly * scale
    # integer content and sign: the lex-largest (A, B, C) term gets a positive leading coefficient
    contents = [c.num.primitive_part()[0] for c in poly.terms.values()]
    g = Fraction(gcd(*(q.numerator for q in contents)), lcm(*(q.denominator for q in contents)))
    if poly.terms[max(poly.terms)].num.leading_coefficient < 0:
        g = -g
    return poly * (1 / g)


@lru_cache(maxsize=None)
def ansatz_constraint(config: AnsatzConfig) -> ABCPolynomial:
    """Residual polynomial in A, B, C whose vanishing gives ``prod * sum == a``.

    Derived by substituting the ansatz symbolically, multiplying through by
    the monomial and coefficient denominators and removing the common content.
    """
    comps = [
        ABCPolynomial.monomial(exps, pre)
        for pre, exps in zip(config.prefactors(), _ABC_EXPONENTS[config.scheme])
    ]
    product = comps[0]
    for c in comps[1:]:
        product = product * c
    total = comps[0]
    for c in comps[1:]:
        total = total + c
    a = RationalFunction.var("a")
    residual = product * total - ABCPolynomial.monomial((0, 0, 0), a)
    return _normalize_constraint(residual)


def constraint_discriminant(config: AnsatzConfig) -> ABCPolynomial:
    """k1^2 - 4 k2 k0 for the constraint viewed as k2 C^2 + k1 C + k0."""
    coeffs = ansatz_constraint(config).coefficients_in_C()
    if set(coeffs) - {0, 1, 2}:
        raise ValueError("constraint is not quadratic in C")
    zero = ABCPolynomial()
    k2, k1, k0 = (coeffs.get(k, zero) for k in (2, 1, 0))
    return k1 * k1 - k2 * k0 * 4


class _NumericABC(ABCPolynomial):
    __slots__ = ()

    def __init__(self, terms):
        self.terms = {m: c for m, c in terms.items() if c != 0}


def _specialize_abc(p: ABCPolynomial, at) -> ABCPolynomial:
    return _NumericABC({m: c.eval(at) for m, c in p.terms.items()})


def _field_sqrt(value):
    if isinstance(value, RationalFunction):
        return ratfunc_sqrt(value)
    return rat_sqrt(value)


def recover_C(config, A, B, at=None, branch: int = 1):
    """Solve the scheme's constraint for C given A and B.

    ``branch=1`` takes the canonical square root: positive leading coefficient
    for rational functions, the non-negative root over Q.  ``branch=-1`` gives
    the other root of the quadratic.  Pass ``at`` when A and B are numbers
    obtained at a specialization of the parameters.
    """
    if branch not in (1, -1):
        raise ValueError("branch must be 1 or -1")
    if isinstance(config, str):
        config = AnsatzConfig.default(config)
    coeffs = ansatz_constraint(config).coefficients_in_C()
    if at is not None:
        coeffs = {k: _specialize_abc(p, at) for k, p in coeffs.items()}
    zero = ABCPolynomial()
    k2, k1, k0 = (coeffs.get(k, zero).evaluate(A, B, 1) for k in (2, 1, 0))
    if k2 == 0:
        raise DegenerateDenominator("the C^2 coefficient of the constraint vanishes")
    if k1 == 0:
        radicand = -k0 / k2
        try:
            return branch * _field_sqrt(radicand)
        except (NotASquare, ArithmeticError) as exc:
            raise NotASquare(f"C^2 = {format_value(radicand)} has no rational root") from exc
    disc = k1 * k1 - 4 * k2 * k0
    try:
        root = _field_sqrt(disc)
    except (NotASquare, ArithmeticError) as exc:
        raise NotASquare(f"discriminant {format_value(disc)} is not a square") from exc
    return (branch * root - k1) / (2 * k2)


@dataclass(frozen=True)
class IntermediateTuple:
    A: Any
    B: Any
    C: Any


@dataclass(frozen=True)
class SolutionTuple:
    components: tuple
    scheme: str
    n: int | None = None
    variables: tuple = ()

    @property
    def names(self):
        return _COMPONENT_NAMES[len(self.components)]

    def product_times_sum(self):
        prod = 1
        total = 0
        for c in self.components:
            prod = prod * c
            total = total + c
        return prod * total

    def negated(self) -> "SolutionTuple":
        return SolutionTuple(tuple(-c for c in self.components), self.scheme, self.n, self.variables)

    def equals_up_to_sign(self, other) -> bool:
        mine = tuple(self.components)
        theirs = tuple(getattr(other, "components", other))
        return mine == theirs or mine == tuple(-c for c in theirs)

    def to_dict(self, verified: bool | None = None):
        if verified is None:
            verified = verify_solution_identity(self)
        return {
            "scheme": self.scheme,
            "n": self.n,
            "variables": list(self.variables),
            "components": [format_value(c) for c in self.components],
            "verified": bool(verified),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data) -> "SolutionTuple":
        comps = tuple(parse_expression(c) for c in data["components"])
        return cls(comps, data.get("scheme", ""), data.get("n"), tuple(data.get("variables", ())))

    @classmethod
    def from_json(cls, text: str) -> "SolutionTuple":
        return cls.from_dict(json.loads(text))


def verify_solution_identity(sol) -> bool:
    """``prod(components) * sum(components) == a`` exactly."""
    if not isinstance(sol, SolutionTuple):
        sol = SolutionTuple(tuple(sol), "")
    lhs = sol.product_times_sum()
    if isinstance(lhs, RationalFunction):
        return lhs == RationalFunction.var("a")
    return False


def specialize(sol: SolutionTuple, at) -> tuple:
    """Exact numeric tuple at ``at``; checks the equation at the point as well."""
    at = {k: Fraction(v) for k, v in at.items()}
    values = []
    for name, comp in zip(sol.names, sol.components):
        try:
            values.append(comp.eval(at))
        except PoleAtPoint:
            factors = vanishing_factors(comp.den, at)
            shown = ", ".join(factors) if factors else str(comp.den)
            raise PoleAtPoint(
                f"component {name} has a pole at {_fmt_at(at)}: factor {shown} vanishes",
                component=name,
                factors=factors,
            ) from None
    prod = Fraction(1)
    for v in values:
        prod *= v
    if prod * sum(values) != at.get("a"):
        raise ArithmeticError(f"specialized tuple fails the equation at {_fmt_at(at)}")
    return tuple(values)


def vanishing_factors(p: Poly, at) -> list:
    _, factors = p.factor_list()
    out = []
    for f, _ in factors:
        try:
            if f.eval(at) == 0:
                out.append(str(f))
        except ArithmeticError:
            continue
    return out


def _fmt_at(at) -> str:
    return ",".join(f"{k}={format_value(v)}" for k, v in sorted(at.items()))


@dataclass(frozen=True)
class ParametrizationGuess:
    p: Any
    q: Any
    r: Any


def verify_elkies_parametrization(guess: ParametrizationGuess) -> bool:
    """Does (A, V) = (s^4 + p, s^6 + q s^4 + r s^2) lie on V^2 = A^3 + 4aA^2 - 32 a s^4 A + 64 a s^8?"""
    a, s, _ = RationalFunction.gens()
    A = s**4 + guess.p
    V = s**6 + guess.q * s**4 + guess.r * s**2
    return V * V - (A**3 + 4 * a * A * A - 32 * s**4 * a * A + 64 * s**8 * a) == 0


# -- curves and families ------------------------------------------------------


@dataclass(frozen=True)
class FamilyCurve:
    """The curve and base point driving one scheme's family.

    ``at`` is ``None`` over Q(a, s, t) and holds the parameter values for a
    specialized copy over Q.
    """

    scheme: str
    curve: WeierstrassCurve
    base_point: Point
    maps: Any = None
    quartic: QuarticModel | None = None
    config: AnsatzConfig = field(default=None)
    at: dict | None = None

    def specialize(self, at) -> "FamilyCurve":
        at = {k: Fraction(v) for k, v in at.items()}
        curve = self.curve.specialize(at)
        quartic = maps = None
        if self.quartic is not None:
            quartic = self.quartic.specialize(at)
            curve, maps = quartic_to_weierstrass(quartic)
        return FamilyCurve(self.scheme, curve, self.base_point.specialize(at), maps, quartic, self.config, at)


def _quartic_from_discriminant(config: AnsatzConfig, scale, B_value) -> QuarticModel:
    """v^2 = disc(u, B)/scale^2 with A = u, as a quartic model."""
    disc = constraint_discriminant(config)
    coeffs = [RationalFunction()] * 5
    for (i, j, _), c in disc.terms.items():
        coeffs[i] = coeffs[i] + c * B_value**j / (scale * scale)
    q4, q3, q2, q1, q0 = coeffs[4], coeffs[3], coeffs[2], coeffs[1], coeffs[0]
    return QuarticModel(q4, q3, q2, q1, q0, ratfunc_sqrt(q0))


@lru_cache(maxsize=None)
def family_curve(scheme: str) -> FamilyCurve:
    scheme = canonical_scheme(scheme)
    config = AnsatzConfig.default(scheme)
    a, s, t = RationalFunction.gens()
    if scheme == "euler3":
        # with U = A/B: (C(B - 4A))^2 = 9 s^4 B^4 V^2
        quartic = _quartic_from_discriminant(config, 6 * s**2, 1)
        curve, maps = quartic_to_weierstrass(quartic)
        return FamilyCurve(scheme, curve, Point(4 * s**4, 16 * s**6 - 8 * s**2 * a * t**4), maps, quartic, config)
    if scheme == "fourvar":
        quartic = _quartic_from_discriminant(config, RationalFunction(1), 1)
        curve, maps = quartic_to_weierstrass(quartic)
        P = Point(-4 * t**5 * a + 4 * t**10 * a**2, -16 * t**10 * a**2 + 16 * t**15 * a**3 + 8 * t**15)
        return FamilyCurve(scheme, curve, P, maps, quartic, config)
    # B = 4 s^4 - A turns the C-discriminant into V^2 = A^3 + 4 a B^2
    zero = RationalFunction()
    curve = WeierstrassCurve(zero, zero, 4 * a, -32 * s**4 * a, 64 * a * s**8)
    return FamilyCurve(scheme, curve, Point(s**4 - 4 * a, s**6 + 12 * a * s**2), None, None, config)


def intermediate_from_point(fc: FamilyCurve, pt: Point, branch: int = 1) -> IntermediateTuple:
    """(A, B, C) carried by a curve point of the scheme's family curve.

    ``branch`` selects the root of the C-quadratic; elkies3 has no choice
    (C = V/s^2) and ignores it.
    """
    if pt.is_infinity:
        raise ExceptionalPoint("the identity carries no solution")
    if fc.scheme == "elkies3":
        s = RationalFunction.var("s") if fc.at is None else fc.at["s"]
        A = pt.x
        B = 4 * s**4 - A
        C = pt.y / s**2
    else:
        u = fc.maps.inverse(pt).u
        if u == 0:
            raise ExceptionalPoint(f"{pt} maps to the u = 0 branch of the quartic (A = 0)")
        if fc.scheme == "euler3":
            A, B = _split_fraction(u)
        else:
            A, B = u, u / u
        try:
            C = recover_C(fc.config, A, B, at=fc.at, branch=branch)
        except DegenerateDenominator as exc:
            raise ExceptionalPoint(str(exc)) from exc
    for name, v in (("A", A), ("B", B), ("C", C)):
        if v == 0:
            raise ExceptionalPoint(f"{name} vanishes at {pt}")
    return IntermediateTuple(A, B, C)


def _split_fraction(u):
    if isinstance(u, RationalFunction):
        return RationalFunction(u.num), RationalFunction(u.den)
    return Fraction(u.numerator), Fraction(u.denominator)


def family(scheme: str, n: int, cap: int | None = SYMBOLIC_CAP) -> SolutionTuple:
    """Solution tuple generated from nP on the scheme's curve, over Q(a, s, t)."""
    fc = family_curve(scheme)
    pt = fc.curve.mul(n, fc.base_point, cap=cap)
    inter = intermediate_from_point(fc, pt)
    comps = fc.config.components(inter.A, inter.B, inter.C)
    return SolutionTuple(comps, fc.scheme, n, _SCHEME_VARIABLES[fc.scheme])


def family_at(scheme: str, n: int, at, branch: int = 1) -> SolutionTuple:
    """Run the same pipeline over Q after substituting ``at`` into curve and base point.

    No symbolic cap applies.  ``branch=1`` takes the non-negative square root,
    which need not be the root picked symbolically, so
    ``specialize(family(...), at)`` equals the result for one of the two
    branches.
    """
    fc = family_curve(scheme).specialize(at)
    pt = fc.curve.mul(n, fc.base_point, cap=None)
    inter = intermediate_from_point(fc, pt, branch)
    comps = fc.config.components(inter.A, inter.B, inter.C, at=fc.at)
    return SolutionTuple(comps, fc.scheme, n, _SCHEME_VARIABLES[fc.scheme])


def family_intermediate(scheme: str, n: int, cap: int | None = SYMBOLIC_CAP) -> IntermediateTuple:
    fc = family_curve(scheme)
    return intermediate_from_point(fc, fc.curve.mul(n, fc.base_point, cap=cap))


def euler_family(n: int, cap: int | None = SYMBOLIC_CAP) -> SolutionTuple:
    return family("euler3", n, cap)


def elkies_family(n: int, cap: int | None = SYMBOLIC_CAP) -> SolutionTuple:
    return family("elkies3", n, cap)


def fourvar_family(n: int, cap: int | None = SYMBOLIC_CAP) -> SolutionTuple:
    return family("fourvar", n, cap)
