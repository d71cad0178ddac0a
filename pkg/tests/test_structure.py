from __future__ import annotations

import pytest

from abelrep.errors import DomainError
from abelrep.perm import (
    PermGroup,
    alternating_group,
    direct_sum,
    groups_equal,
    parallel_sum,
    regular_group,
    trivial_group,
)
from abelrep.structure import (
    adjacent,
    classify,
    factor_invariants,
    isolated,
    orbit_structure,
    subdirect_decompose,
)

C3 = regular_group([3])


def _sub(G, k):
    g = G.generators[0]
    return PermGroup(G.degree, [g**k])


def test_factor_invariants_examples():
    C4 = regular_group([4])
    assert factor_invariants(C4, _sub(C4, 2)) == [2]
    Z8 = regular_group([8])
    assert factor_invariants(Z8, _sub(Z8, 4)) == [4]
    assert factor_invariants(regular_group([3, 3]), trivial_group(9)) == [3, 3]
    assert factor_invariants(regular_group([6, 2]), trivial_group(12)) == [2, 6]
    assert factor_invariants(C4, C4) == []
    with pytest.raises(DomainError):
        factor_invariants(C4, regular_group([2, 2]))


def test_orbit_structure_direct_sum():
    info = orbit_structure(direct_sum(C3, C3))
    assert groups_equal(info.pair_kernels[0, 1], C3)
    assert info.adjacency == [[False, False], [False, False]] and info.isolated == [True, True]


def test_orbit_structure_parallel():
    info = orbit_structure(parallel_sum(C3, 2))
    assert info.pair_kernels[0, 1].order() == 1 and info.pair_invariants[0, 1] == [3]
    assert info.adjacency[0][1] and info.adjacency[1][0] and info.isolated == [False, False]


def test_orbit_structure_z8_z12(z8_z12):
    info = orbit_structure(z8_z12)
    assert info.constituents[0].order() == 8 and info.pair_kernels[0, 1].order() == 2
    assert info.pair_invariants[0, 1] == [4] and info.pair_invariants[1, 0] == [4]
    assert info.adjacency[0][1]


def test_adjacent_and_isolated():
    assert adjacent(parallel_sum(C3, 2), 0, 1)
    assert not adjacent(direct_sum(regular_group([2]), regular_group([2])), 0, 1)
    assert not adjacent(parallel_sum(regular_group([2, 2]), 2), 0, 1)
    assert isolated(regular_group([5]), 0)
    assert isolated(direct_sum(C3, C3), 0) and isolated(direct_sum(C3, C3), 1)
    assert not isolated(parallel_sum(C3, 2), 0)
    with pytest.raises(DomainError):
        adjacent(C3, 0, 0)
    with pytest.raises(DomainError):
        orbit_structure(alternating_group(4))


def test_subdirect_decompose_examples(z8_z12):
    d = subdirect_decompose(direct_sum(C3, C3), range(3))
    assert groups_equal(d.left_kernel, d.left) and groups_equal(d.right_kernel, d.right)
    d = subdirect_decompose(parallel_sum(C3, 2), range(3))
    assert d.left_kernel.order() == 1 and d.right_kernel.order() == 1
    assert groups_equal(d.left, C3) and groups_equal(d.right, C3)
    assert groups_equal(d.reassemble(), parallel_sum(C3, 2))
    d = subdirect_decompose(z8_z12, range(8))
    assert (d.left.order(), d.left_kernel.order(), d.right.order(), d.right_kernel.order()) == (8, 2, 12, 3)
    assert len(d.iso.pairing) == 4
    assert groups_equal(d.reassemble(), z8_z12)
    with pytest.raises(DomainError):
        subdirect_decompose(C3, range(3))


def test_classify_examples():
    r = classify(regular_group([4]))
    assert r.verdict_DGR and not r.verdict_GR
    r = classify(regular_group([2, 2, 2]))
    assert r.verdict_GR and r.verdict_DGR
    r = classify(trivial_group(2))
    assert r.verdict_DGR and not r.verdict_GR
    assert classify(trivial_group(1)).verdict_GR and classify(trivial_group(3)).verdict_GR


def test_classify_mixed_sums():
    # a fixed point plus a parallel pair: the orbit condition holds everywhere
    r = classify(direct_sum(regular_group([2]), parallel_sum(C3, 2)), check_oracle=True)
    assert r.verdict_GR and r.oracle["agrees"]
    # the isolated C3 orbit has trivial factor but a non-2 constituent
    r = classify(direct_sum(C3, parallel_sum(C3, 2)), check_oracle=True)
    assert r.verdict_DGR and not r.verdict_GR and r.oracle["agrees"]
    assert r.orbits[0].isolated and r.orbits[0].factor_invariants == []


def test_classify_witnesses():
    r = classify(regular_group([2, 2]), witness=True)
    assert r.witness_graph is not None and r.witness_digraph is not None
    r = classify(regular_group([5]), witness=True)
    assert r.witness_graph is None and r.witness_digraph is not None
    data = r.to_json()
    assert data["verdict_GR"] is False and data["witness_graph"] is None
