from __future__ import annotations

import math
import random

import pytest

from abelrep.autgrp import aut_equals, automorphism_group, brute_force_aut, find_isomorphism, is_automorphism
from abelrep.cgraph import NO_LOOP, ColouredGraph, cayley_star_labels, orb_digraph, orb_graph
from abelrep.errors import CapacityError
from abelrep.perm import groups_equal, involution, regular_group, translation


def _complete(n):
    return ColouredGraph.from_matrix([[0] * n for _ in range(n)])


def test_complete_graphs():
    for n in range(1, 7):
        assert automorphism_group(_complete(n)).order() == math.factorial(n)


def test_fig1_translations_and_order():
    g = cayley_star_labels((2, 2, 2, 2), ["1000", ["0100", "1010"], ["0010", "0001"]])
    A = regular_group([2, 2, 2, 2])
    assert all(is_automorphism(g, t) for t in A.elements)
    assert automorphism_group(g).order() == 16 and aut_equals(g, A)


def test_involution_is_automorphism():
    g = cayley_star_labels((3, 3), ["10", "01", "11"])
    assert is_automorphism(g, involution(regular_group([3, 3])))
    assert automorphism_group(g).order() == 18
    assert brute_force_aut(g).order() == 18


def test_orb_c5():
    C5 = regular_group([5])
    assert aut_equals(orb_digraph(C5), C5)
    assert not aut_equals(orb_graph(C5), C5)
    assert brute_force_aut(orb_graph(C5)).order() == 10


def test_brute_force_examples():
    assert brute_force_aut(_complete(3)).order() == 6
    tri = ColouredGraph.from_matrix([[NO_LOOP, 1, 0], [0, NO_LOOP, 1], [1, 0, NO_LOOP]], directed=True)
    assert groups_equal(brute_force_aut(tri), regular_group([3]))
    assert brute_force_aut(cayley_star_labels((2, 2, 2), ["100", "010", "001"])).order() == 8
    with pytest.raises(CapacityError):
        brute_force_aut(_complete(11))


def test_vertex_limit():
    with pytest.raises(CapacityError):
        automorphism_group(_complete(5), vertex_limit=4)


def test_find_isomorphism():
    rng = random.Random(3)
    g = cayley_star_labels((3, 3), ["10", "01"])
    for _ in range(5):
        f = list(range(9))
        rng.shuffle(f)
        h = g.permuted(f)
        iso = find_isomorphism(g, h)
        assert iso is not None and g.permuted(iso) == h
    other = cayley_star_labels((3, 3), ["10", "11"])
    assert find_isomorphism(g, cayley_star_labels((3, 3), ["10"])) is None
    assert find_isomorphism(g, other) is not None


def test_group_generators_are_automorphisms():
    g = orb_digraph(regular_group([6]))
    A = automorphism_group(g)
    assert all(is_automorphism(g, p) for p in A.generators)
    t = translation((6,), (1,))
    assert is_automorphism(g, t)
