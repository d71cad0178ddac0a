from __future__ import annotations

from abelrep.corpus import character_kernels, corpus, named_groups, random_groups
from abelrep.perm import is_abelian

# frozen from the closure oracles (2*-closure for GR, 2-closure for DGR)
CORPUS_SIZE = 233
CORPUS_GR = 75
CORPUS_DGR = 212
CORPUS_NOT_2_ORBIT_CLOSED = 21


def test_corpus_shape(groups):
    assert len(groups) == CORPUS_SIZE
    assert all(G.degree <= 12 and is_abelian(G) for _, G in groups)
    keys = {(G.degree, G.elements) for _, G in groups}
    assert len(keys) == len(groups)


def test_corpus_verdict_counts(reports):
    assert sum(r.verdict_GR for *_, r in reports) == CORPUS_GR
    assert sum(r.verdict_DGR for *_, r in reports) == CORPUS_DGR
    assert sum(not r.is_2_orbit_closed for *_, r in reports) == CORPUS_NOT_2_ORBIT_CLOSED
    assert all(r.verdict_DGR for *_, r in reports if r.verdict_GR)


def test_corpus_is_deterministic():
    assert [n for n, _ in corpus()] == [n for n, _ in corpus()]
    assert [n for n, _ in random_groups(5, seed=1)] == [n for n, _ in random_groups(5, seed=1)]
    assert len(character_kernels(4)) == 4
    assert len(named_groups()) > 40
