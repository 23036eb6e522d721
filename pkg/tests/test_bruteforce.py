"""The enumeration oracle is itself checked against textbook values."""

import pytest

from belyitools.bruteforce import h0_order, h1_order, h2_order, is_coboundary_2
from belyitools.cohomology import CocycleClass, carry_cocycle, coboundary
from belyitools.groups import FiniteGroup, GModule


@pytest.mark.parametrize("G,factors,action,orders", [
    (FiniteGroup.cyclic(2), (2,), None, (2, 2, 2)),
    (FiniteGroup.cyclic(3), (3,), None, (3, 3, 3)),
    (FiniteGroup.cyclic(2), (4,), {1: [[3]]}, (2, 2, 2)),
    (FiniteGroup.cyclic(3), (2,), None, (2, 1, 1)),
    (FiniteGroup.abelian(2, 2), (2,), None, (2, 4, 8)),
    (FiniteGroup.quaternion(), (2,), None, (2, 4, 4)),
    (FiniteGroup.symmetric(3), (2,), None, (2, 2, 2)),
    (FiniteGroup.symmetric(3), (3,), None, (3, 1, 1)),
])
def test_textbook_orders(G, factors, action, orders):
    A = GModule(G, factors, generator_action=action)
    assert (h0_order(G, A), h1_order(G, A), h2_order(G, A)) == orders


def test_coboundary_recognition():
    G = FiniteGroup.cyclic(4)
    A = GModule(G, (4,))
    carry = CocycleClass(G, A, 2, {t: (v,) for t, v in carry_cocycle(4).items()})
    assert not is_coboundary_2(G, A, carry.values)
    assert is_coboundary_2(G, A, carry.scale(4).values)
    c = {(g,): ((3 * g + 1) % 4,) for g in G.elements}
    assert is_coboundary_2(G, A, coboundary(G, A, c, 1))
    assert not is_coboundary_2(G, A, (carry + CocycleClass(G, A, 2, coboundary(G, A, c, 1))).values)


def test_search_statistics():
    G = FiniteGroup.abelian(2, 2)
    order, stats = h2_order(G, GModule(G, (2,)), return_stats=True)
    assert order == 8 and stats["variables"] > 0 and stats["nodes"] > 0
