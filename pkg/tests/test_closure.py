from __future__ import annotations

from abelrep.closure import (
    is_2_closed,
    is_2_orbit_closed,
    is_2_star_closed,
    two_closure,
    two_orbit_closure,
    two_orbit_compatible,
    two_star_closure,
)
from abelrep.perm import (
    PermGroup,
    alternating_group,
    direct_sum,
    groups_equal,
    parallel_sum,
    parse_cycles,
    regular_group,
    symmetric_group,
    trivial_group,
)


def _three_orbit_example():
    return PermGroup(9, [parse_cycles("(1 2 3)(4 5 6)", 9), parse_cycles("(4 5 6)(7 8 9)", 9)])


def test_two_closure_examples():
    assert groups_equal(two_closure(regular_group([5])), regular_group([5]))
    assert groups_equal(two_closure(alternating_group(4)), symmetric_group(4))
    assert groups_equal(two_closure(symmetric_group(4)), symmetric_group(4))


def test_two_star_closure_examples():
    D = two_star_closure(regular_group([5]))
    assert D.order() == 10
    assert groups_equal(two_star_closure(regular_group([2, 2, 2])), regular_group([2, 2, 2]))
    assert groups_equal(two_star_closure(symmetric_group(2)), symmetric_group(2))


def test_closed_predicates():
    C4 = regular_group([4])
    assert is_2_closed(C4) and not is_2_star_closed(C4)
    A4 = alternating_group(4)
    assert not is_2_closed(A4) and not is_2_star_closed(A4)
    I1 = trivial_group(1)
    assert is_2_closed(I1) and is_2_star_closed(I1)


def test_two_orbit_compatible():
    P = parallel_sum(regular_group([3]), 2)
    assert all(two_orbit_compatible(P, g) for g in P.elements)
    assert not two_orbit_compatible(P, parse_cycles("(1 2 3)", 6))
    D = direct_sum(regular_group([3]), regular_group([3]))
    assert two_orbit_compatible(D, parse_cycles("(1 2 3)", 6))


def test_two_orbit_closure_examples():
    assert groups_equal(two_orbit_closure(regular_group([6])), regular_group([6]))
    P = parallel_sum(regular_group([3]), 2)
    assert groups_equal(two_orbit_closure(P), P)
    G = _three_orbit_example()
    C = two_orbit_closure(G)
    assert G.order() == 9 and C.order() == 27
    assert parse_cycles("(1 2 3)", 9) in C
    assert not is_2_orbit_closed(G)
    assert is_2_orbit_closed(direct_sum(direct_sum(regular_group([3]), regular_group([3])), regular_group([3])))
    assert is_2_orbit_closed(regular_group([4]))


def test_closure_chain_on_example():
    G = _three_orbit_example()
    assert G.elements <= two_orbit_closure(G).elements <= two_closure(G).elements <= two_star_closure(G).elements
