"""Weierstrass curves, the group law, quartic models and torsion certificates."""

from .quartic import (
    BirationalMapPair,
    QuarticModel,
    QuarticPoint,
    curve_point_to_quartic,
    quartic_to_weierstrass,
)
from .torsion import TorsionCertificate, non_torsion_certificate, to_short_integral_form
from .weierstrass import (
    INFINITY,
    SYMBOLIC_CAP,
    Point,
    WeierstrassCurve,
    group_add,
    on_curve,
    scalar_mul,
)

__all__ = [
    "INFINITY",
    "SYMBOLIC_CAP",
    "BirationalMapPair",
    "Point",
    "QuarticModel",
    "QuarticPoint",
    "TorsionCertificate",
    "WeierstrassCurve",
    "curve_point_to_quartic",
    "group_add",
    "non_torsion_certificate",
    "on_curve",
    "quartic_to_weierstrass",
    "scalar_mul",
    "to_short_integral_form",
]
