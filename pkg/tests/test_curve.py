from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from sympy.ntheory.elliptic_curve import EllipticCurve

import printed_forms as pf
from xyzfam.curve import (
    INFINITY,
    Point,
    QuarticModel,
    QuarticPoint,
    WeierstrassCurve,
    curve_point_to_quartic,
    group_add,
    non_torsion_certificate,
    on_curve,
    quartic_to_weierstrass,
    scalar_mul,
    to_short_integral_form,
)
from xyzfam.errors import (
    OffCurveInput,
    PoleAtPoint,
    SingularCurve,
    SingularQuartic,
    SymbolicDepthExceeded,
)
from xyzfam.exact import RationalFunction, parse_expression
from xyzfam.families import family_curve

P = parse_expression
ELKIES_11 = WeierstrassCurve(0, 0, 4, -32, 64)


# -- sympy oracle ---------------------------------------------------------------
# sympy's doubling test uses y1 + y2 == 0, which is only the negation condition
# when a1 = a3 = 0.  The oracle therefore works on the model obtained by
# completing the square, y' = y + (a1 x + a3)/2, computed here independently.


def _q(v):
    return sympy.Rational(v.numerator, v.denominator)


def oracle_curve(c: WeierstrassCurve):
    a1, a2, a3, a4, a6 = (_q(v) for v in (c.a1, c.a2, c.a3, c.a4, c.a6))
    E = EllipticCurve(a4 + a1 * a3 / 2, a6 + a3**2 / 4, a1=0, a2=a2 + a1**2 / 4, a3=0)
    return E, (a1, a3)


def to_oracle(oracle, pt: Point):
    E, (a1, a3) = oracle
    if pt.is_infinity:
        return E(0, 1, 0)
    x = _q(pt.x)
    return E(x, _q(pt.y) + (a1 * x + a3) / 2)


def from_oracle(oracle, q) -> Point:
    _, (a1, a3) = oracle
    if q.z == 0:
        return INFINITY
    x, y = q.x / q.z, q.y / q.z
    y = y - (a1 * x + a3) / 2
    return Point(Fraction(str(x)), Fraction(str(y)))


# -- anchors and examples ---------------------------------------------------------


class TestOnCurve:
    def test_printed_points(self):
        assert on_curve(pf.curve_from(pf.ELKIES_CURVE), pf.point_from(pf.ELKIES_POINT))
        assert on_curve(pf.curve_from(pf.EULER_CURVE), pf.point_from(pf.EULER_POINT))
        assert on_curve(pf.curve_from(pf.FOURVAR_CURVE), pf.point_from(pf.FOURVAR_POINT))

    def test_numeric(self):
        assert on_curve(ELKIES_11, Point(-3, 13))
        assert not on_curve(ELKIES_11, Point(-3, 12))
        assert on_curve(ELKIES_11, INFINITY)

    def test_singular(self):
        with pytest.raises(SingularCurve):
            WeierstrassCurve(0, 0, 0, 0, 0)


class TestGroupLaw:
    def test_identity_and_inverse(self):
        p = Point(-3, 13)
        assert group_add(ELKIES_11, p, INFINITY) == p
        assert group_add(ELKIES_11, p, ELKIES_11.neg(p)) == INFINITY

    def test_long_form_negation(self):
        E = family_curve("euler").curve.specialize({"a": 1, "s": 1, "t": 1})
        p = Point(4, 8)
        minus = E.neg(p)
        assert minus == Point(4, -8 - E.a1 * 4 - E.a3)
        assert on_curve(E, minus)

    def test_off_curve(self):
        with pytest.raises(OffCurveInput):
            group_add(ELKIES_11, Point(-3, 12), Point(-3, 13))

    def test_elkies_double(self):
        E, p = pf.curve_from(pf.ELKIES_CURVE), pf.point_from(pf.ELKIES_POINT)
        assert E.double(p).x == P(pf.ELKIES_2P_X)

    def test_fourvar_double(self):
        E, p = pf.curve_from(pf.FOURVAR_CURVE), pf.point_from(pf.FOURVAR_POINT)
        assert scalar_mul(E, 2, p).x == P(pf.FOURVAR_2P_X)

    def test_scalar_mul_edges(self):
        p = Point(-3, 13)
        assert scalar_mul(ELKIES_11, 1, p) == p
        assert scalar_mul(ELKIES_11, 0, p) == INFINITY
        assert scalar_mul(ELKIES_11, -3, p) == ELKIES_11.neg(scalar_mul(ELKIES_11, 3, p))

    def test_symbolic_cap(self):
        fc = family_curve("elkies")
        with pytest.raises(SymbolicDepthExceeded):
            scalar_mul(fc.curve, 5, fc.base_point)
        assert on_curve(fc.curve, scalar_mul(fc.curve, 5, fc.base_point, cap=None))

    def test_order_two_lookalike(self):
        # 3P = (4, 0) has Y = 0 but is not 2-torsion on a long-form curve
        E = family_curve("fourvar").curve.specialize({"a": 1, "t": 1})
        p3 = scalar_mul(E, 3, Point(0, 8))
        assert p3 == Point(4, 0)
        assert E.neg(p3) != p3
        assert scalar_mul(E, 6, Point(0, 8)) == Point(Fraction(-8, 9), Fraction(-56, 27))

    def test_matches_oracle(self):
        E = family_curve("euler").curve.specialize({"a": 1, "s": 1, "t": 1})
        assert scalar_mul(E, 2, Point(4, 8)) == Point(136, -1320)
        assert scalar_mul(E, 3, Point(4, 8)) == Point(Fraction(5944, 1089), Fraction(736832, 35937))

    def test_text_roundtrip(self):
        E = family_curve("euler").curve
        assert WeierstrassCurve.parse(str(E)) == E
        p = family_curve("euler").base_point
        assert Point.parse(str(p)) == p
        assert Point.parse("O") == INFINITY


# -- quartic models ---------------------------------------------------------------


class TestQuartic:
    def test_euler_curve_matches_printed(self):
        q = QuarticModel.from_coefficients(*(P(c) for c in pf.EULER_QUARTIC[:4]), P("s^2"))
        curve, _ = quartic_to_weierstrass(q)
        assert curve == pf.curve_from(pf.EULER_CURVE)

    def test_fourvar_curve_matches_printed(self):
        q = QuarticModel.from_coefficients(*(P(c) for c in pf.FOURVAR_QUARTIC[:4]), P("t^5"))
        curve, _ = quartic_to_weierstrass(q)
        assert curve == pf.curve_from(pf.FOURVAR_CURVE)

    def test_family_quartics(self):
        assert family_curve("euler").quartic.q4 == P(pf.EULER_QUARTIC[0])
        assert family_curve("fourvar").quartic.q1 == P(pf.FOURVAR_QUARTIC[3])

    def test_euler_2q(self):
        fc = family_curve("euler")
        image = curve_point_to_quartic(fc.maps, fc.curve.double(fc.base_point))
        assert image.u == P(pf.EULER_2Q)
        assert fc.quartic.contains(image)

    def test_fourvar_2q(self):
        fc = family_curve("fourvar")
        assert curve_point_to_quartic(fc.maps, fc.curve.double(fc.base_point)).u == P(pf.FOURVAR_2Q)

    def test_base_point_is_u0_branch(self):
        for scheme in ("euler", "fourvar"):
            fc = family_curve(scheme)
            q = fc.quartic
            assert fc.maps.forward(QuarticPoint(0 * q.e, -q.e)) == fc.base_point

    def test_roundtrip_symbolic(self):
        # a symbolic point (u, v) = (t, s); q4 is chosen so it lies on the quartic
        u = RationalFunction.var("t")
        v = RationalFunction.var("s")
        e = RationalFunction.var("a")
        q3, q2, q1 = RationalFunction(1), RationalFunction(2), RationalFunction(3)
        q4 = (v * v - e * e - q1 * u - q2 * u**2 - q3 * u**3) / u**4
        quartic = QuarticModel.from_coefficients(q4, q3, q2, q1, e)
        curve, maps = quartic_to_weierstrass(quartic)
        pt = QuarticPoint(u, v)
        X = maps.forward(pt)
        assert curve.contains(X)
        assert maps.inverse(X) == pt
        assert maps.forward(maps.inverse(X)) == X

    def test_singular_quartic(self):
        with pytest.raises(SingularQuartic):
            QuarticModel(1, 0, 0, 0, 4, 3)
        with pytest.raises(SingularQuartic):
            QuarticModel.from_coefficients(0, 0, 0, 0, 1)


# -- integral models and certificates --------------------------------------------------


class TestTorsion:
    def test_short_form_fixed_point(self):
        E = WeierstrassCurve(0, 0, 0, 0, 1)
        short, m = to_short_integral_form(E)
        assert short == E
        assert m(Point(2, 3)) == Point(2, 3)

    def test_elkies_integral_model(self):
        short, m = to_short_integral_form(ELKIES_11)
        assert all(c.denominator == 1 for c in short.coefficients)
        assert on_curve(short, m(Point(-3, 13)))

    def test_euler_integral_model(self):
        E = family_curve("euler").curve.specialize({"a": 1, "s": 1, "t": 1})
        assert E == WeierstrassCurve(-4, 8, -4, 64, -256)
        short, m = to_short_integral_form(E)
        assert short.a1 == short.a2 == short.a3 == 0
        assert all(c.denominator == 1 for c in short.coefficients)
        assert on_curve(short, m(Point(4, 8)))

    def test_certificates(self):
        cert = non_torsion_certificate(ELKIES_11, Point(-3, 13))
        assert cert.non_torsion
        E = family_curve("euler").curve.specialize({"a": 1, "s": 1, "t": 1})
        assert non_torsion_certificate(E, Point(4, 8)).non_torsion
        inf = non_torsion_certificate(ELKIES_11, INFINITY)
        assert inf.verdict == "torsion" and inf.order == 1

    def test_torsion_point(self):
        # y^2 = x^3 + 1 has (2, 3) of order 6
        cert = non_torsion_certificate(WeierstrassCurve(0, 0, 0, 0, 1), Point(2, 3))
        assert cert.verdict == "torsion" and cert.order == 6

    def test_json_witness(self):
        doc = non_torsion_certificate(ELKIES_11, Point(-3, 13)).to_dict()
        assert doc["verdict"] == "non_torsion"
        assert {"n", "X", "Y", "integral"} <= set(doc["witness"][0])
        assert doc["witness"][-1]["integral"] in ("yes", "no")

    def test_off_curve(self):
        with pytest.raises(OffCurveInput):
            non_torsion_certificate(ELKIES_11, Point(-3, 12))


# -- properties at random specializations ------------------------------------------------

nonzero_q = st.fractions(min_value=-6, max_value=6, max_denominator=5).filter(bool)
specializations = st.tuples(st.sampled_from(["euler3", "elkies3", "fourvar"]), nonzero_q, nonzero_q, nonzero_q)


def numeric_family_curve(scheme, a, s, t):
    fc = family_curve(scheme)
    at = {"a": a, "s": s, "t": t}
    try:
        E = fc.curve.specialize(at)
        p = fc.base_point.specialize(at)
    except (SingularCurve, PoleAtPoint):
        assume(False)
    return E, p


@settings(max_examples=100, deadline=None)
@given(specializations, st.integers(1, 4), st.integers(1, 4), st.integers(1, 3))
def test_group_axioms_at_specializations(case, i, j, k):
    E, p = numeric_family_curve(*case)
    assert on_curve(E, p)
    Pi, Pj, Pk = (scalar_mul(E, n, p) for n in (i, j, k))
    s_ij = group_add(E, Pi, Pj)
    assert on_curve(E, s_ij)  # closure
    assert s_ij == group_add(E, Pj, Pi)  # commutativity
    assert group_add(E, Pi, INFINITY) == Pi  # identity
    assert group_add(E, Pi, E.neg(Pi)) == INFINITY  # inverse
    assert group_add(E, s_ij, Pk) == group_add(E, Pi, group_add(E, Pj, Pk))  # associativity
    # independent oracle
    O = oracle_curve(E)
    assert from_oracle(O, to_oracle(O, Pi) + to_oracle(O, Pj)) == s_ij
    assert from_oracle(O, to_oracle(O, Pi) + to_oracle(O, Pi)) == scalar_mul(E, 2 * i, p)


@settings(max_examples=40, deadline=None)
@given(specializations, st.integers(-4, 4), st.integers(-4, 4))
def test_scalar_mul_additive(case, m, n):
    E, p = numeric_family_curve(*case)
    assert scalar_mul(E, m + n, p, cap=None) == group_add(E, scalar_mul(E, m, p), scalar_mul(E, n, p))


@lru_cache(maxsize=None)
def symbolic_sum(scheme):
    fc = family_curve(scheme)
    two = fc.curve.double(fc.base_point)
    return fc, two, fc.curve.add(fc.base_point, two)


@settings(max_examples=50, deadline=None)
@given(specializations)
def test_specialization_commutes_with_group_law(case):
    scheme, a, s, t = case
    at = {"a": a, "s": s, "t": t}
    fc, two, three = symbolic_sum(scheme)
    try:
        expected = three.specialize(at)
        E = fc.curve.specialize(at)
        p, q = fc.base_point.specialize(at), two.specialize(at)
    except (SingularCurve, PoleAtPoint):
        assume(False)
    assert group_add(E, p, q) == expected
