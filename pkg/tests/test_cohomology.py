from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from belyitools.bruteforce import is_coboundary_2
from belyitools.cohomology import (CocycleClass, ShortExactSeq, build_obstruction_class,
                                   carry_cocycle, coboundary, cohomology_group,
                                   connecting_delta, extension_group, is_split,
                                   lift_to_cocycle, local_global_kernel, min_splitting_index,
                                   restriction, splitting_certificate)
from belyitools.errors import BadInput, SizeCapExceeded
from belyitools.groups import FiniteGroup, GModule, module_actions, small_groups

C2, C4, V4 = FiniteGroup.cyclic(2), FiniteGroup.cyclic(4), FiniteGroup.abelian(2, 2)


def _invariants(G, factors, n, action=None):
    A = GModule(G, factors, generator_action=action)
    return sorted(cohomology_group(G, A, n).invariants)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_cyclic_with_own_order(m):
    G = FiniteGroup.cyclic(m)
    for n in (0, 1, 2):
        assert _invariants(G, (m,), n) == [m]


def test_known_groups():
    assert [_invariants(V4, (2,), n) for n in (0, 1, 2)] == [[2], [2, 2], [2, 2, 2]]
    assert _invariants(FiniteGroup.quaternion(), (2,), 2) == [2, 2]
    assert len(_invariants(FiniteGroup.dihedral(4), (2,), 2)) == 3
    assert len(_invariants(FiniteGroup.abelian(2, 2, 2), (2,), 2)) == 6
    assert _invariants(FiniteGroup.symmetric(3), (3,), 2) == []
    # sign action of C2 on Z/4: H^1 = Z/4[N]/(1-g) = Z/2, H^2 = Z/4^G / N = Z/2
    sign = {1: [[3]]}
    assert _invariants(C2, (4,), 1, sign) == [2]
    assert _invariants(C2, (4,), 2, sign) == [2]
    # coprime orders give nothing in positive degree
    assert _invariants(FiniteGroup.cyclic(3), (4,), 1) == []
    assert _invariants(FiniteGroup.cyclic(3), (2, 2), 2) == []


@st.composite
def group_module(draw, max_order=6):
    G = draw(st.sampled_from([g for g in small_groups(8) if g.order <= max_order]))
    factors = draw(st.sampled_from([(2,), (3,), (4,), (2, 2)]))
    A = draw(st.sampled_from(module_actions(G, factors, limit=3)))
    return G, A


@st.composite
def cochain(draw, G, A, n):
    from itertools import product
    return {t: draw(st.sampled_from(A.elements)) for t in product(G.elements, repeat=n)}


@settings(max_examples=40, deadline=None)
@given(group_module(), st.data())
def test_d_squared_is_zero(GA, data):
    G, A = GA
    for n in (0, 1):
        c = data.draw(cochain(G, A, n))
        assert CocycleClass(G, A, n + 1, coboundary(G, A, c, n)).is_cocycle()


@settings(max_examples=40, deadline=None)
@given(group_module(), st.data())
def test_coordinates_are_class_invariants(GA, data):
    G, A = GA
    for n in (1, 2):
        H = cohomology_group(G, A, n)
        coords = [data.draw(st.integers(0, d - 1)) for d in H.invariants]
        other = [data.draw(st.integers(0, d - 1)) for d in H.invariants]
        cls = H.class_from_coordinates(coords)
        assert H.coordinates(cls) == tuple(coords)
        c = data.draw(cochain(G, A, n - 1))
        shifted = cls + CocycleClass(G, A, n, coboundary(G, A, c, n - 1))
        assert H.coordinates(shifted) == tuple(coords)
        total = cls + H.class_from_coordinates(other)
        assert H.coordinates(total) == tuple((a + b) % d for a, b, d in
                                             zip(coords, other, H.invariants))
        if n == 2:
            assert H.is_zero(cls) == is_coboundary_2(G, A, cls.values)


@settings(max_examples=30, deadline=None)
@given(group_module(8), st.data())
def test_restriction_is_transitive(GA, data):
    G, A = GA
    H2 = cohomology_group(G, A, 2)
    cls = H2.class_from_coordinates([data.draw(st.integers(0, d - 1)) for d in H2.invariants])
    H = data.draw(st.sampled_from(G.subgroups))
    K = data.draw(st.sampled_from([K for K in G.subgroups if K <= H]))
    direct = restriction(cls, K)
    inner = H.group.subgroup([H.index_of[k] for k in K.elements])
    twice = restriction(restriction(cls, H), inner)
    assert direct.values == twice.values
    assert direct.is_cocycle()
    zero = CocycleClass.zero(G, A, 2)
    assert cohomology_group(K.group, A.restrict(K), 2).is_zero(restriction(zero, K))


def test_carry_cocycle_generates():
    for m in (2, 3, 4, 6):
        G = FiniteGroup.cyclic(m)
        A = GModule(G, (m,))
        cls = CocycleClass(G, A, 2, {t: (v,) for t, v in carry_cocycle(m).items()})
        H = cohomology_group(G, A, 2)
        (c,) = H.coordinates(cls)
        assert gcd(c, m) == 1


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_obstruction_class(m):
    res = build_obstruction_class(m)
    assert res.min_index == m
    assert all(row["index"] < m and not row["vanishes"] for row in res.certificate)
    if m == 4:
        C2in4 = res.group.subgroup([0, 2])
        r = restriction(res.cls, C2in4)
        assert not cohomology_group(r.group, r.module, 2).is_zero(r)


def test_splitting_index_basics():
    G = FiniteGroup.cyclic(4)
    A = GModule(G, (2,))
    assert min_splitting_index(CocycleClass.zero(G, A, 2)) == 1
    rows = splitting_certificate(CocycleClass.zero(G, A, 2))
    assert all(r["vanishes"] for r in rows)
    with pytest.raises(BadInput):
        min_splitting_index(CocycleClass.zero(G, A, 1))
    with pytest.raises(SizeCapExceeded):
        build_obstruction_class(30)


def test_delta_for_z4():
    A, B, C = GModule(C2, (2,)), GModule(C2, (4,)), GModule(C2, (2,))
    ses = ShortExactSeq(A, B, C, [[2]], [[1]])
    tau = cohomology_group(C2, C, 1).class_from_coordinates([1])
    d = connecting_delta(ses, tau)
    assert not cohomology_group(C2, A, 2).is_zero(d)
    assert lift_to_cocycle(ses, tau) is None
    for seed in range(5):
        assert cohomology_group(C2, A, 2).cohomologous(d, connecting_delta(ses, tau, seed=seed))


def test_extension_of_nonzero_class_is_z4():
    A = GModule(C2, (2,))
    cls = cohomology_group(C2, A, 2).class_from_coordinates([1])
    ext = extension_group(C2, A, cls)
    assert ext.group.order == 4 and not is_split(ext)[0]
    assert max(ext.group.element_order(g) for g in ext.group.elements) == 4
    with pytest.raises(BadInput):
        bad = CocycleClass(C2, A, 2, {(1, 1): (1,), (0, 1): (1,)})
        extension_group(C2, A, bad)


def test_local_global_kernel_families():
    A = GModule(V4, (2,))
    H2 = cohomology_group(V4, A, 2)
    for cls in H2.all_classes():
        assert not local_global_kernel([V4.whole()], cls)
    witness = H2.class_from_coordinates(
        next(c for c in H2.all_coordinates() if local_global_kernel([(0, 1), (0, 2)],
                                                                     H2.class_from_coordinates(c))))
    assert not H2.is_zero(witness)
    with pytest.raises(BadInput):
        local_global_kernel([((0, 1), 1)], witness)
