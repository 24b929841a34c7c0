"""Quartics v^2 = q4*u^4 + q3*u^3 + q2*u^2 + q1*u + e^2 and their Weierstrass models.

The reduction is the classical one anchored at the rational point (0, e):
that point goes to infinity, (0, -e) goes to (-a2, a1*a2 - a3), and

    X = (2e(v + e) + q1*u) / u^2
    Y = (4e^2(v + e) + 2e(q1*u + q2*u^2) - q1^2*u^2/(2e)) / u^3

lands on Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6 with
a1 = q1/e, a2 = q2 - q1^2/(4e^2), a3 = 2e*q3, a4 = -4e^2*q4, a6 = a2*a4.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..errors import ExceptionalPoint, SingularQuartic
from .weierstrass import INFINITY, Point, WeierstrassCurve, format_value, specialize_value


@dataclass(frozen=True)
class QuarticPoint:
    u: Any
    v: Any

    def __str__(self):
        return f"({format_value(self.u)}, {format_value(self.v)})"


@dataclass(frozen=True)
class QuarticModel:
    q4: Any
    q3: Any
    q2: Any
    q1: Any
    q0: Any
    e: Any

    def __post_init__(self):
        for name in ("q4", "q3", "q2", "q1", "q0", "e"):
            if isinstance(getattr(self, name), int):
                object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.e == 0:
            raise SingularQuartic("constant term must be a nonzero square e^2")
        if self.e * self.e != self.q0:
            raise SingularQuartic(f"constant term {format_value(self.q0)} is not e^2 for e = {format_value(self.e)}")
        if self.discriminant == 0:
            raise SingularQuartic("quartic has a repeated root")

    @classmethod
    def from_coefficients(cls, q4, q3, q2, q1, e) -> "QuarticModel":
        return cls(q4, q3, q2, q1, e * e, e)

    @property
    def discriminant(self):
        a, b, c, d, e = self.q4, self.q3, self.q2, self.q1, self.q0
        return (
            256 * a**3 * e**3 - 192 * a**2 * b * d * e**2 - 128 * a**2 * c**2 * e**2
            + 144 * a**2 * c * d**2 * e - 27 * a**2 * d**4 + 144 * a * b**2 * c * e**2
            - 6 * a * b**2 * d**2 * e - 80 * a * b * c**2 * d * e + 18 * a * b * c * d**3
            + 16 * a * c**4 * e - 4 * a * c**3 * d**2 - 27 * b**4 * e**2 + 18 * b**3 * c * d * e
            - 4 * b**3 * d**3 - 4 * b**2 * c**3 * e + b**2 * c**2 * d**2
        )

    def value(self, u):
        return (((self.q4 * u + self.q3) * u + self.q2) * u + self.q1) * u + self.q0

    def contains(self, pt: QuarticPoint) -> bool:
        return pt.v * pt.v == self.value(pt.u)

    def specialize(self, at) -> "QuarticModel":
        vals = [specialize_value(c, at) for c in (self.q4, self.q3, self.q2, self.q1, self.q0, self.e)]
        return QuarticModel(*vals)


@dataclass(frozen=True)
class BirationalMapPair:
    """Mutually inverse maps between a quartic and its Weierstrass model."""

    quartic: QuarticModel
    curve: WeierstrassCurve

    def forward(self, pt: QuarticPoint) -> Point:
        q = self.quartic
        u, v, e = pt.u, pt.v, q.e
        if u == 0:
            if v == e:
                return INFINITY
            return Point(-self.curve.a2, self.curve.a1 * self.curve.a2 - self.curve.a3)
        x = (2 * e * (v + e) + q.q1 * u) / (u * u)
        y = (4 * e * e * (v + e) + 2 * e * (q.q1 * u + q.q2 * u * u) - q.q1 * q.q1 * u * u / (2 * e)) / (u * u * u)
        return Point(x, y)

    def inverse(self, pt: Point) -> QuarticPoint:
        q = self.quartic
        e = q.e
        if pt.is_infinity:
            return QuarticPoint(0 * e, e)
        if pt.y == 0:
            raise ExceptionalPoint(f"{pt} has Y = 0 and no image on the quartic")
        u = (2 * e * (pt.x + q.q2) - q.q1 * q.q1 / (2 * e)) / pt.y
        v = -e + u * (u * pt.x - q.q1) / (2 * e)
        return QuarticPoint(u, v)


def quartic_to_weierstrass(q: QuarticModel):
    """Return ``(curve, maps)`` for a quartic with square constant term."""
    e = q.e
    a1 = q.q1 / e
    a2 = q.q2 - q.q1 * q.q1 / (4 * e * e)
    a3 = 2 * e * q.q3
    a4 = -4 * e * e * q.q4
    a6 = a2 * a4
    curve = WeierstrassCurve(a1, a3, a2, a4, a6)
    return curve, BirationalMapPair(q, curve)


def curve_point_to_quartic(maps: BirationalMapPair, pt: Point) -> QuarticPoint:
    return maps.inverse(pt)
