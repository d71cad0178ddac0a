from __future__ import annotations

import json

import pytest

from abelrep.autgrp import automorphism_group
from abelrep.cgraph import (
    NO_LOOP,
    ColouredGraph,
    colour_degree_tuple,
    cayley_star_labels,
    label_partition,
    merge_colours,
    orb_digraph,
    orb_graph,
    orbital_classes,
)
from abelrep.errors import DomainError, ParseError
from abelrep.perm import parallel_sum, regular_group, symmetric_group, trivial_group


def test_validation():
    with pytest.raises(DomainError):
        ColouredGraph.from_matrix([[0, 1], [2, 0]])
    with pytest.raises(DomainError):
        ColouredGraph.from_matrix([[0, 2], [2, 0]])
    with pytest.raises(DomainError):
        ColouredGraph.from_matrix([[0, 1, 0], [1, 0]])
    g = ColouredGraph.from_matrix([[5, 0], [0, 5]])
    assert g.colours[0][0] == NO_LOOP and g.colour_count == 1


def test_orb_digraph_examples():
    assert orb_digraph(symmetric_group(2)).colour_count == 2
    assert orb_digraph(trivial_group(2)).colour_count == 4
    C4 = orb_digraph(regular_group([4]))
    off = {C4.colours[u][v] for u in range(4) for v in range(4) if u != v}
    diag = {C4.colours[u][u] for u in range(4)}
    assert len(off) == 3 and len(diag) == 1


def test_orb_graph_examples():
    assert orb_graph(regular_group([4])).colour_count == 2
    assert orb_graph(trivial_group(2)).colour_count == 1
    assert orb_graph(regular_group([2, 2])).colour_count == 3
    assert len(orbital_classes(regular_group([5]), directed=True, loops=False)) == 4


def test_cayley_star_examples():
    g = cayley_star_labels((2, 2), ["10", "01"])
    assert g.n == 4 and g.colour_count == 3
    assert all(colour_degree_tuple(g, v) == (1, 1, 1) for v in range(4))
    f1 = cayley_star_labels((2, 2, 2, 2), ["1000", ["0100", "1010"], ["0010", "0001"]])
    assert f1.n == 16 and f1.colour_count == 4
    z3 = cayley_star_labels((3, 3), ["10", "01", "11"])
    assert z3.n == 9 and z3.colour_count == 4


def test_partition_validation():
    with pytest.raises(DomainError):
        cayley_star_labels((2, 2), ["10", "01", "11"])  # no colour-0 pair left
    with pytest.raises(DomainError):
        cayley_star_labels((3,), ["1", "2"])  # g and g^-1 both listed
    with pytest.raises(DomainError):
        cayley_star_labels((3, 3), ["00"])


def test_merge_colours():
    g = orb_graph(regular_group([2, 2, 2, 2]))
    assert merge_colours(g, {c: c for c in g.used_colours()}) == g
    mono = merge_colours(g, {c: 0 for c in g.used_colours()})
    assert mono.colour_count == 1 and automorphism_group(mono).order() == 20922789888000
    with pytest.raises(DomainError):
        merge_colours(g, {0: 1})


def test_merge_reproduces_fig1():
    A, pi = label_partition((2, 2, 2, 2), ["1000", ["0100", "1010"], ["0010", "0001"]])
    target = cayley_star_labels((2, 2, 2, 2), ["1000", ["0100", "1010"], ["0010", "0001"]])
    orb = orb_graph(A)
    colour_of = {}
    for c in orb.used_colours():
        u, v = orb.colour_class(c)[0]
        colour_of[c] = target.colours[u][v]
    assert merge_colours(orb, colour_of) == target


def test_json_round_trip_and_errors():
    g = cayley_star_labels((3, 3), ["10", "01"])
    assert ColouredGraph.from_json(json.dumps(g.to_json())) == g
    d = orb_digraph(parallel_sum(regular_group([3]), 2))
    assert ColouredGraph.from_json(d.to_json()) == d
    with pytest.raises(ParseError) as info:
        ColouredGraph.from_json('{"colours": [[0, 1],\n [1 0]]}')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        ColouredGraph.from_json('{"n": 3, "colours": [[0, 0], [0, 0]]}')
    with pytest.raises(ParseError, match="invalid graph"):
        ColouredGraph.from_json('{"colours": [[0, 2], [2, 0]]}')


def test_dot_export():
    g = cayley_star_labels((2, 2), ["10", "01"])
    dot = g.to_dot()
    assert dot.startswith("graph G {") and dot.count("--") == 4
    assert 'label="1"' in dot and 'label="2"' in dot and 'label="0"' not in dot
    assert g.to_dot() == dot
    d = ColouredGraph.from_matrix([[NO_LOOP, 1, 0], [0, NO_LOOP, 1], [1, 0, NO_LOOP]], directed=True)
    assert d.to_dot().startswith("digraph") and d.to_dot().count("->") == 3


def test_colour_degree_tuple_directed():
    d = ColouredGraph.from_matrix([[NO_LOOP, 1, 0], [0, NO_LOOP, 1], [1, 0, NO_LOOP]], directed=True)
    assert colour_degree_tuple(d, 0) == ((1, 1), (1, 1))
    with pytest.raises(DomainError):
        colour_degree_tuple(d, 3)
