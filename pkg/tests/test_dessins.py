from itertools import permutations

import pytest
from hypothesis import assume, given, settings, strategies as st

from belyitools.dessins import (CASE1, CASE2, NOT_GENUS_ONE, Dessin, compose,
                                dichotomy_census, enumerate_dessins,
                                euler_characteristic_by_faces, inverse, is_transitive,
                                parse_cycles, to_cycles)
from belyitools.errors import BadInput, NotTransitive


@st.composite
def dessins(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    s0 = tuple(draw(st.permutations(range(n))))
    s1 = tuple(draw(st.permutations(range(n))))
    assume(is_transitive(n, [s0, s1]))
    return Dessin(s0, s1)


def test_examples():
    d = Dessin.from_cycle_strings("(1 2 3)", "(1 2 3)")
    assert d.genus == 1 and len(d.automorphisms) == 3
    assert d.classify_genus_one() == CASE2
    rep = d.riemann_hurwitz_check()
    assert rep.genus_one_form() == (6, 6) and rep.lhs == rep.rhs == 0
    t = Dessin.from_cycle_strings("(1 2)", "(2 3)")
    assert t.genus == 0 and len(t.automorphisms) == 1
    assert t.classify_genus_one() == NOT_GENUS_ONE


def test_free_case1_witness():
    d = Dessin.from_cycle_strings("(1 2 3)(4 5 6)", "(1 2 4)(3 5 6)")
    assert d.genus == 1 and len(d.automorphisms) == 2
    assert d.aut_acts_freely_on_surface()
    assert d.classify_genus_one() == CASE1
    red, _ = d.reduced_part()
    assert red.n == 3 and red.genus == 1
    assert d.riemann_hurwitz_check().ramification == 0


@settings(max_examples=150)
@given(dessins())
def test_genus_matches_face_tracing(d):
    assert euler_characteristic_by_faces(d.sigma0, d.sigma1) == 2 - 2 * d.genus
    assert compose(compose(d.sigma0, d.sigma1), d.sigma_inf) == tuple(range(d.n))


@settings(max_examples=60)
@given(dessins(5))
def test_automorphisms_are_the_centralizer(d):
    brute = sorted(p for p in permutations(range(d.n))
                   if compose(p, d.sigma0) == compose(d.sigma0, p)
                   and compose(p, d.sigma1) == compose(d.sigma1, p))
    assert sorted(d.automorphisms) == brute
    assert d.n % len(brute) == 0
    assert d.is_regular() == (len(brute) == d.n)


@settings(max_examples=100)
@given(dessins())
def test_riemann_hurwitz_for_quotients(d):
    rep = d.riemann_hurwitz_check()
    assert rep.holds
    red, where = d.reduced_part()
    assert red.n * len(d.automorphisms) == d.n
    if d.genus == 1:
        assert d.classify_genus_one() in (CASE1, CASE2)
        a, b = rep.genus_one_form()
        assert a == b


@settings(max_examples=60)
@given(dessins(), st.data())
def test_canonical_form_is_conjugation_invariant(d, data):
    g = tuple(data.draw(st.permutations(range(d.n))))
    gi = inverse(g)
    e = Dessin(compose(compose(gi, d.sigma0), g), compose(compose(gi, d.sigma1), g))
    assert d.is_isomorphic(e)
    assert e.genus == d.genus and len(e.automorphisms) == len(d.automorphisms)


def _burnside_classes(n):
    """Isomorphism classes of transitive pairs, by Burnside's lemma."""
    perms = list(permutations(range(n)))
    pairs = [(a, b) for a in perms for b in perms if is_transitive(n, [a, b])]
    total = 0
    for g in perms:
        gi = inverse(g)
        total += sum(1 for a, b in pairs
                     if compose(compose(gi, a), g) == a and compose(compose(gi, b), g) == b)
    assert total % len(perms) == 0
    return len(pairs), total // len(perms)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_counts(n):
    pairs, classes = _burnside_classes(n)
    assert sum(1 for _ in enumerate_dessins(n, full=True)) == pairs
    assert sum(1 for _ in enumerate_dessins(n, unique=True)) == classes


def test_small_census():
    counts, witness, rh = dichotomy_census(4)
    assert set(counts) <= {CASE1, CASE2}
    assert rh == sum(counts.values())


def test_cycle_parsing_and_errors():
    s = parse_cycles("(1 2 3)(4,5)")
    assert to_cycles(s) == [[1, 2, 3], [4, 5]]
    assert parse_cycles("()", 3) == (0, 1, 2)
    for bad in ("(1 2", "(1 (2))", "(1 x)", "1 2"):
        with pytest.raises(BadInput):
            parse_cycles(bad)
    with pytest.raises(BadInput):
        parse_cycles("(1 1)")
    with pytest.raises(NotTransitive):
        Dessin.from_cycle_strings("(1 2)", "(1 2)", n=3)
