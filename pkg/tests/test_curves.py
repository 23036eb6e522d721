from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from belyitools.curves import (RationalCurve, divide_point_global, division_polynomial,
                               point_order, rational_torsion, reduce_point, scalar_mul)
from belyitools.errors import CurveMismatch, NotOnCurve, SingularCurve

small = st.fractions(min_value=-6, max_value=6, max_denominator=3)


@st.composite
def curve_with_point(draw):
    a, x0, y0 = draw(small), draw(small), draw(small)
    b = y0 * y0 - x0**3 - a * x0
    assume(4 * a**3 + 27 * b * b != 0)
    E = RationalCurve.short(a, b)
    return E, E.point(x0, y0)


@st.composite
def long_curve_with_point(draw):
    a1, a2, a3, a4 = (draw(st.integers(-3, 3)) for _ in range(4))
    x0, y0 = draw(st.integers(-4, 4)), draw(st.integers(-4, 4))
    a6 = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0**3 - a2 * x0 * x0 - a4 * x0
    try:
        E = RationalCurve(a1, a2, a3, a4, a6)
    except SingularCurve:
        assume(False)
    return E, E.point(x0, y0)


@settings(max_examples=60)
@given(curve_with_point(), st.integers(-3, 3), st.integers(-3, 3))
def test_group_law(EP, j, k):
    E, P = EP
    Q, R = scalar_mul(2, P) if j else P, -P
    assert P + E.infinity() == P
    assert P + (-P) == E.infinity()
    assert P + Q == Q + P
    assert (P + Q) + R == P + (Q + R)
    assert scalar_mul(j + k, P) == scalar_mul(j, P) + scalar_mul(k, P)


@settings(max_examples=40)
@given(long_curve_with_point(), st.integers(1, 4))
def test_long_models(EP, k):
    E, P = EP
    Q = scalar_mul(k, P)
    assert Q.is_infinity or E.contains(Q.x, Q.y)
    assert E.from_short(E.to_short(Q)) == Q
    assert E.short_model.discriminant == E.discriminant
    assert E.short_model.j_invariant == E.j_invariant


@settings(max_examples=40)
@given(curve_with_point(), st.integers(1, 5))
def test_division_polynomial_gives_x_of_multiple(EP, m):
    E, P = EP
    dp = division_polynomial(E, m)
    Q = scalar_mul(m, P)
    if Q.is_infinity:
        assert dp.psi_sq(P.x) == 0
    else:
        assert dp.phi(P.x) / dp.psi_sq(P.x) == Q.x


@settings(max_examples=30, deadline=None)
@given(curve_with_point(), st.integers(2, 3))
def test_divide_point_recovers_preimage(EP, m):
    E, P = EP
    assume(point_order(P, 12) is None)
    Q = scalar_mul(m, P)
    found = divide_point_global(E, Q, m)
    assert P in found
    for R in found:
        assert scalar_mul(m, R) == Q


@settings(max_examples=40)
@given(curve_with_point(), st.sampled_from([5, 7, 11, 13, 17, 19]))
def test_reduction_is_homomorphism(EP, p):
    E, P = EP
    assume(E.has_good_reduction(p))
    Ep = E.reduce(p)
    Q = scalar_mul(2, P)
    for A, B in ((P, P), (P, Q), (Q, -P)):
        ra, rb, rs = reduce_point(A, p), reduce_point(B, p), reduce_point(A + B, p)
        assert Ep.contains(ra) and Ep.add(ra, rb) == rs
    assert Ep.mul(3, reduce_point(P, p)) == reduce_point(scalar_mul(3, P), p)


def test_fp_point_counts_hasse():
    E = RationalCurve.short(-1, 1)
    for p in (5, 7, 11, 13, 101):
        n = len(E.reduce(p).points())
        assert abs(n - (p + 1)) <= 2 * p**0.5


def test_known_torsion():
    e11 = RationalCurve(0, -1, 1, 0, 0)
    assert rational_torsion(e11, 5).order == 5
    assert point_order(e11.point(0, 0)) == 5
    e = RationalCurve.short(0, 1)
    assert rational_torsion(e, 6).order == 6
    assert point_order(e.point(2, 3)) == 6
    gold = RationalCurve.from_cubic_roots(-2795, 1365, 1430)
    assert rational_torsion(gold, 2).order == 4


def test_golden_point_halves_but_no_quarters(golden):
    E, P = golden
    halves = divide_point_global(E, P, 2)
    assert sorted(Q.x for Q in halves) == sorted(
        [Fraction(341), Fraction(1282645, 1089), Fraction(26065, 16), Fraction(137670, 49)])
    assert divide_point_global(E, P, 4) == []


def test_errors():
    with pytest.raises(SingularCurve):
        RationalCurve.short(0, 0)
    E = RationalCurve.short(0, 1)
    with pytest.raises(NotOnCurve):
        E.point(1, 1)
    F = RationalCurve.short(1, 0)
    with pytest.raises(CurveMismatch):
        divide_point_global(F, E.point(0, 1), 2)
