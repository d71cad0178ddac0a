from __future__ import annotations

import random

from abelrep.iso import abstract_isomorphisms, conjugate, permutation_isomorphism
from abelrep.perm import PermGroup, Permutation, direct_sum, groups_equal, parallel_sum, regular_group


def _shuffled(G, seed):
    f = list(range(G.degree))
    random.Random(seed).shuffle(f)
    return Permutation(f)


def test_permutation_isomorphism_recovers_conjugation():
    for G in (regular_group([3, 3]), parallel_sum(regular_group([4]), 2), direct_sum(regular_group([2]), regular_group([6]))):
        for seed in range(3):
            H = conjugate(G, _shuffled(G, seed))
            f = permutation_isomorphism(G, H)
            assert f is not None and groups_equal(conjugate(G, f), H)


def test_non_isomorphic():
    assert permutation_isomorphism(regular_group([4]), regular_group([2, 2])) is None
    # same abstract group Z6, but one orbit versus two orbits
    assert permutation_isomorphism(regular_group([6]), PermGroup(6, [Permutation([1, 0, 3, 4, 2, 5])])) is None


def test_abstract_isomorphisms_count():
    # Aut(Z3^2) = GL(2, 3) has order 48
    G = regular_group([3, 3])
    assert sum(1 for _ in abstract_isomorphisms(G, G)) == 48
