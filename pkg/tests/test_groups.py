from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from belyitools.errors import InvalidModule, NotAGroup, NotASubgroup, SizeCapExceeded
from belyitools.groups import (FiniteGroup, GModule, invariant_factor_forms,
                               module_actions, module_automorphisms, small_groups)

GROUPS = small_groups(8)
group_st = st.sampled_from(GROUPS)


def _signature(G):
    return (G.order, G.is_abelian(), tuple(sorted(Counter(G.element_order(g)
                                                          for g in G.elements).items())))


def test_small_groups_are_pairwise_distinct():
    assert len(GROUPS) == 14
    assert len({_signature(G) for G in GROUPS}) == 14
    assert Counter(G.order for G in GROUPS) == {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5}


@pytest.mark.parametrize("G,count", [(FiniteGroup.symmetric(3), 6), (FiniteGroup.dihedral(4), 10),
                                     (FiniteGroup.quaternion(), 6),
                                     (FiniteGroup.abelian(2, 2, 2), 16),
                                     (FiniteGroup.cyclic(6), 4)])
def test_subgroup_counts(G, count):
    assert len(G.subgroups) == count


@settings(max_examples=30)
@given(group_st)
def test_group_axioms_and_lagrange(G):
    e = G.identity
    for a in G.elements:
        assert G.mul(a, G.inv(a)) == e
        assert G.power(a, G.element_order(a)) == e
        for b in G.elements:
            for c in G.generators:
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.closure(G.generators) == frozenset(G.elements)
    for H in G.subgroups:
        assert G.order % H.order == 0
        assert H.group.order == H.order
        assert H.group.identity == 0


def test_non_associative_table_rejected():
    # a Latin square with identity 0 and inverses, but not associative
    table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup):
        FiniteGroup(table)
    with pytest.raises(NotAGroup):
        FiniteGroup([[0, 1], [1, 1]])


def test_subgroup_validation():
    G = FiniteGroup.cyclic(4)
    with pytest.raises(NotASubgroup):
        G.subgroup([0, 1])
    assert G.subgroup([0, 2]).index == 2


def test_invariant_factor_forms():
    assert invariant_factor_forms(8) == [(2, 2, 2), (2, 4), (8,)]
    assert invariant_factor_forms(9) == [(3, 3), (9,)]
    assert invariant_factor_forms(12) == [(2, 6), (12,)]


def test_module_automorphism_counts():
    # |Aut(Z/n)| = phi(n); |GL2(F2)| = 6; |Aut(Z/2 x Z/4)| = 8
    assert len(module_automorphisms((9,))) == 6
    assert len(module_automorphisms((2, 2))) == 6
    assert len(module_automorphisms((2, 4))) == 8


@settings(max_examples=30)
@given(group_st, st.sampled_from([(2,), (3,), (4,), (2, 2), (3, 3)]))
def test_module_actions_are_actions(G, factors):
    acts = module_actions(G, factors, limit=4)
    assert acts[0].is_trivial_action()
    assert len({A.action for A in acts}) == len(acts)
    for A in acts:
        for g in G.elements:
            for h in G.elements:
                for a in A.basis():
                    assert A.act(G.mul(g, h), a) == A.act(g, A.act(h, a))


def test_module_errors():
    G = FiniteGroup.cyclic(2)
    # an element of order 3 cannot act by -1 on Z/4
    with pytest.raises(InvalidModule):
        GModule(FiniteGroup.cyclic(3), (4,), generator_action={1: [[3]]})
    with pytest.raises(InvalidModule):
        GModule(G, (2, 4), generator_action={1: [[1, 1], [1, 1]]})
    with pytest.raises(SizeCapExceeded):
        GModule(G, (128,))


def test_restrict_and_fixed_points():
    G = FiniteGroup.cyclic(4)
    A = GModule(G, (5,), generator_action={1: [[2]]})
    assert A.fixed_points() == [(0,)]
    H = G.subgroup([0, 2])
    AH = A.restrict(H)
    assert AH.fixed_points() == [(0,)]
    assert AH.act(1, (1,)) == (4,)
