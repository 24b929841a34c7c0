"""Nagell-Lutz / Mazur non-torsion certificates for points on curves over Q."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import factorint

from ..errors import OffCurveInput
from ..exact import format_rational
from .weierstrass import INFINITY, Point, WeierstrassCurve

#: Mazur: the order of a rational torsion point lies in 1..10 or is 12
MAZUR_ORDERS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)
MAX_TORSION_ORDER = 12


@dataclass(frozen=True)
class ShortModelMap:
    """(X, Y) -> (u^2 (X + b2/12), u^3 (Y + (a1 X + a3)/2))."""

    b2: Fraction
    a1: Fraction
    a3: Fraction
    u: int

    def __call__(self, pt: Point) -> Point:
        if pt.is_infinity:
            return pt
        u2 = self.u * self.u
        return Point(u2 * (pt.x + self.b2 / 12), u2 * self.u * (pt.y + (self.a1 * pt.x + self.a3) / 2))


def _scale_for_integrality(A: Fraction, B: Fraction) -> int:
    # smallest u with u^4 A and u^6 B integral
    u = 1
    primes = set(factorint(A.denominator)) | set(factorint(B.denominator))
    for p in primes:
        ea = _valuation(A.denominator, p)
        eb = _valuation(B.denominator, p)
        u *= p ** max(-(-ea // 4), -(-eb // 6))
    return u


def _valuation(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def to_short_integral_form(curve: WeierstrassCurve):
    """Return ``(short_curve, point_map)`` with short_curve y^2 = x^3 + A x + B, A, B in Z."""
    if curve.symbolic:
        raise ValueError("integral models need a curve over Q; specialize first")
    a1, a2, a3, a4, a6 = (Fraction(c) for c in curve.coefficients)
    b2, _, _, _ = curve.b_invariants
    c4, c6 = curve.c_invariants
    A, B = -c4 / 48, -c6 / 864
    u = _scale_for_integrality(A, B)
    short = WeierstrassCurve(0, 0, 0, A * u**4, B * u**6)
    return short, ShortModelMap(Fraction(b2), a1, a3, u)


def _is_integral(pt: Point) -> bool:
    return pt.x.denominator == 1 and pt.y.denominator == 1


@dataclass(frozen=True)
class TorsionCertificate:
    """Outcome of computing nP for n <= 12 on the integral short model.

    ``verdict`` is ``"non_torsion"``, ``"torsion"`` (with ``order``) or
    ``"inconclusive"``; ``reason`` says which argument closed the case.
    """

    curve: WeierstrassCurve
    point: Point
    short_curve: WeierstrassCurve
    short_point: Point
    verdict: str
    reason: str
    order: int | None = None
    witness: list = field(default_factory=list)

    @property
    def non_torsion(self) -> bool:
        return self.verdict == "non_torsion"

    def to_dict(self):
        return {
            "curve": str(self.curve),
            "point": str(self.point),
            "integral_model": str(self.short_curve),
            "integral_point": str(self.short_point),
            "verdict": self.verdict,
            "reason": self.reason,
            "order": self.order,
            "witness": [
                {
                    "n": n,
                    "X": "O" if pt.is_infinity else format_rational(pt.x),
                    "Y": "O" if pt.is_infinity else format_rational(pt.y),
                    "integral": "yes" if integral else "no",
                }
                for n, pt, integral in self.witness
            ],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def non_torsion_certificate(curve: WeierstrassCurve, point: Point) -> TorsionCertificate:
    """Decide whether ``point`` has infinite order.

    On the integral short model every torsion point has integer coordinates
    (Nagell-Lutz), and a torsion point has order at most 12 (Mazur).  So a
    non-integral multiple, or twelve multiples none of which is the identity,
    each certify infinite order.
    """
    if not curve.contains(point):
        raise OffCurveInput(f"{point} is not on {curve}")
    short, to_short = to_short_integral_form(curve)
    sp = to_short(point)
    if sp.is_infinity:
        return TorsionCertificate(curve, point, short, sp, "torsion", "identity", order=1)

    witness = []
    first_bad = None
    order = None
    for n, q in enumerate(short.multiples(sp, MAX_TORSION_ORDER), start=1):
        if q.is_infinity:
            witness.append((n, q, True))
            order = n
            break
        integral = _is_integral(q)
        witness.append((n, q, integral))
        if not integral and first_bad is None:
            first_bad = n

    if order is not None:
        if first_bad is not None:  # impossible on a correct model
            return TorsionCertificate(curve, point, short, sp, "inconclusive", "contradictory witness", witness=witness)
        return TorsionCertificate(curve, point, short, sp, "torsion", "multiple is identity", order=order, witness=witness)
    if first_bad is not None:
        reason = f"{first_bad}P has a non-integral coordinate (Nagell-Lutz)"
    else:
        reason = f"nP != O for n <= {MAX_TORSION_ORDER} (Mazur)"
    return TorsionCertificate(curve, point, short, sp, "non_torsion", reason, witness=witness)
