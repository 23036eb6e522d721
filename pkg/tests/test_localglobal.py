from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from belyitools.arith import is_padic_square_exact
from belyitools.curves import RationalCurve, reduce_point, scalar_mul
from belyitools.errors import BadInput
from belyitools.localglobal import (DIVISIBLE, NOT_DIVISIBLE, REAL, Place,
                                    divide_point_local_finite, divide_point_local_real,
                                    local_profile, sha0_witness_check, verify_local_witness)


@st.composite
def split_curve_with_point(draw):
    """y^2 = (x - e1)(x - e2)(x - e3) through a planted point that is not 2-torsion."""
    e1, e2 = draw(st.lists(st.integers(-12, 12), min_size=2, max_size=2, unique=True))
    x = draw(st.integers(-15, 40))
    y = draw(st.integers(1, 30))
    assume(x not in (e1, e2))
    e3 = x - Fraction(y * y, (x - e1) * (x - e2))
    assume(e3 not in (e1, e2))
    E = RationalCurve.from_cubic_roots(e1, e2, e3)
    return E, E.point(x, y), [e1, e2, e3]


@st.composite
def curve_with_point(draw):
    a = draw(st.integers(-5, 5))
    x0, y0 = draw(st.integers(-5, 5)), draw(st.integers(-5, 5))
    b = y0 * y0 - x0**3 - a * x0
    assume(4 * a**3 + 27 * b * b != 0)
    E = RationalCurve.short(a, b)
    return E, E.point(x0, y0)


def _in_m_fp(E, P, m, p):
    Ep = E.reduce(p)
    target = reduce_point(P, p)
    return any(Ep.mul(m, Q) == target for Q in Ep.points())


@settings(max_examples=60, deadline=None)
@given(curve_with_point(), st.sampled_from([2, 3]), st.sampled_from([5, 7, 11, 13, 17, 19, 23]))
def test_good_primes_agree_with_reduction(EP, m, p):
    # for good p not dividing m, P in mE(Q_p) iff its reduction lies in mE(F_p)
    E, P = EP
    assume(E.has_good_reduction(p) and p % m)
    d = divide_point_local_finite(E, P, m, p)
    assert d.verdict == (DIVISIBLE if _in_m_fp(E, P, m, p) else NOT_DIVISIBLE)


@settings(max_examples=60, deadline=None)
@given(split_curve_with_point(), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_two_descent_criterion(EPes, p):
    # with full rational 2-torsion, P in 2E(Q_p) iff every x - e_i is a square in Q_p
    E, P, es = EPes
    expected = all(is_padic_square_exact(P.x - e, p) for e in es)
    assert divide_point_local_finite(E, P, 2, p).verdict == (DIVISIBLE if expected else NOT_DIVISIBLE)


@settings(max_examples=40, deadline=None)
@given(split_curve_with_point())
def test_real_place_two_descent(EPes):
    E, P, es = EPes
    expected = P.x >= max(es)
    assert divide_point_local_real(E, P, 2).verdict == (DIVISIBLE if expected else NOT_DIVISIBLE)
    assert divide_point_local_real(E, P, 3).verdict == DIVISIBLE


def test_golden_real_components(golden):
    E, _ = golden
    assert divide_point_local_real(E, E.point(-2795, 0), 2).verdict == NOT_DIVISIBLE
    assert divide_point_local_real(E, E.point(1430, 0), 2).verdict == DIVISIBLE


@settings(max_examples=15, deadline=None)
@given(curve_with_point(), st.sampled_from([2, 3]))
def test_multiples_are_divisible_everywhere(EP, m):
    E, G = EP
    P = scalar_mul(m, G)
    assume(not P.is_infinity)
    for d in local_profile(E, P, m, prime_bound=30):
        assert d.verdict == DIVISIBLE, d


def test_identity_is_divisible(golden):
    E, _ = golden
    O = E.infinity()
    assert divide_point_local_finite(E, O, 4, 2).verdict == DIVISIBLE
    assert divide_point_local_real(E, O, 4).verdict == DIVISIBLE


def test_golden_profile_small_bound(golden):
    E, P = golden
    rep = sha0_witness_check(E, P, 4, prime_bound=100)
    assert rep.conclusion and not rep.global_result
    assert {Place(p) for p in (2, 3, 5, 7, 11, 13, 17, 97)} | {REAL} <= \
        {d.place for d in rep.decisions}
    assert any("not checked" in n for n in rep.notes)
    # m = 2 has global solutions, so no witness
    rep2 = sha0_witness_check(E, P, 2, prime_bound=30)
    assert not rep2.conclusion and len(rep2.global_result) == 4


@pytest.mark.parametrize("p", [2, 3, 5, 7, 13, 101])
def test_local_witnesses_recheck(golden, p):
    E, P = golden
    d = divide_point_local_finite(E, P, 4, p, precision_cap=64)
    assert d.verdict == DIVISIBLE
    v = verify_local_witness(E, P, 4, d)
    assert v is None or v >= 8


def test_bad_place_inputs(golden):
    E, P = golden
    with pytest.raises(BadInput):
        divide_point_local_finite(E, P, 4, 9)
    with pytest.raises(BadInput):
        Place(1)
    with pytest.raises(BadInput):
        local_profile(E, P, 4, prime_bound=1)


def test_threads_give_same_profile(golden):
    E, P = golden
    one = [(d.place, d.verdict) for d in local_profile(E, P, 4, prime_bound=60)]
    two = [(d.place, d.verdict) for d in local_profile(E, P, 4, prime_bound=60, threads=2)]
    assert one == two
