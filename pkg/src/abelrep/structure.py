"""Orbit structure of abelian permutation groups and the GR / DGR decision."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cgraph import ColouredGraph
from .closure import is_2_orbit_closed, two_closure, two_star_closure
from .errors import DomainError
from .perm import (
    FactorIso,
    PermGroup,
    Permutation,
    SubdirectDecomposition,
    _coset_key,
    format_cycles,
    groups_equal,
    is_abelian,
    is_elementary_abelian_2,
    is_subgroup,
    pointwise_stabilizer,
    restrict_perm,
    restriction,
)


def _prime_factors(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def factor_invariants(G: PermGroup, H: PermGroup) -> list[int]:
    """Invariant factors d1 | d2 | ... of the abelian factor group G/H.

    For each prime p the number of cosets killed by p^e is p^(s_e); the jumps
    s_e - s_(e-1) count the cyclic p-parts of size at least p^e. The empty
    list is the trivial group.
    """
    if not is_subgroup(H, G):
        raise DomainError("factor_invariants: H is not a subgroup of G")
    if not is_abelian(G):
        raise DomainError("factor_invariants needs an abelian group")
    index = G.order() // H.order()
    if index == 1:
        return []
    kernel = H.elements
    elements = G.sorted_elements()
    prime_parts: dict[int, list[int]] = {}
    for p, a in _prime_factors(index):
        ranks = [0]
        e = 1
        while ranks[-1] < a:
            killed = sum(1 for g in elements if g ** (p**e) in kernel) // H.order()
            r = 0
            while killed > 1:
                killed //= p
                r += 1
            ranks.append(r)
            e += 1
        at_least = [ranks[e] - ranks[e - 1] for e in range(1, len(ranks))]
        exps = []
        for e, count in enumerate(at_least, start=1):
            nxt = at_least[e] if e < len(at_least) else 0
            exps += [e] * (count - nxt)
        prime_parts[p] = sorted(exps, reverse=True)
    length = max(len(v) for v in prime_parts.values())
    factors = []
    for k in range(length):
        d = 1
        for p, exps in prime_parts.items():
            if k < len(exps):
                d *= p ** exps[k]
        factors.append(d)
    return sorted(factors)


def is_elementary_2_invariants(invariants: Iterable[int]) -> bool:
    return all(d == 2 for d in invariants)


@dataclass
class OrbitStructure:
    """Constituents A_i, kernels A_i^j and A_i^*, adjacency and isolation.

    Groups are on local point indices of their orbit. ``pair_kernels[i, j]``
    is the restriction to X_i of the pointwise stabilizer of X_j.
    """

    orbits: list[tuple[int, ...]]
    constituents: list[PermGroup]
    pair_kernels: dict[tuple[int, int], PermGroup]
    star_kernels: list[PermGroup]
    pair_invariants: dict[tuple[int, int], list[int]]
    adjacency: list[list[bool]]
    isolated: list[bool]
    factor_invariants: list[list[int]]

    def to_json(self) -> dict:
        r = len(self.orbits)
        return {
            "orbits": [[x + 1 for x in orb] for orb in self.orbits],
            "constituents": [_group_json(g) for g in self.constituents],
            "pair_kernels": [
                {
                    "i": i + 1,
                    "j": j + 1,
                    "order": self.pair_kernels[i, j].order(),
                    "factor_invariants": self.pair_invariants[i, j],
                }
                for i in range(r)
                for j in range(r)
                if i != j
            ],
            "star_kernels": [_group_json(g) for g in self.star_kernels],
            "adjacency": self.adjacency,
            "isolated": self.isolated,
            "factor_invariants": self.factor_invariants,
        }


def _group_json(G: PermGroup) -> dict:
    return {
        "degree": G.degree,
        "order": G.order(),
        "generators": [format_cycles(g) for g in G.generators],
    }


def _require_abelian(A: PermGroup) -> None:
    if not is_abelian(A):
        raise DomainError("the orbit structure theory needs an abelian group")


def orbit_structure(A: PermGroup) -> OrbitStructure:
    _require_abelian(A)
    orbits = A.orbits
    r = len(orbits)
    everything = set(range(A.degree))
    constituents = [restriction(A, orb) for orb in orbits]
    pair_kernels = {}
    pair_invariants = {}
    for i in range(r):
        for j in range(r):
            if i != j:
                K = restriction(pointwise_stabilizer(A, orbits[j]), orbits[i])
                pair_kernels[i, j] = K
                pair_invariants[i, j] = factor_invariants(constituents[i], K)
    star_kernels = [
        restriction(pointwise_stabilizer(A, everything - set(orb)), orb) for orb in orbits
    ]
    adjacency = [
        [i != j and not is_elementary_2_invariants(pair_invariants[i, j]) for j in range(r)]
        for i in range(r)
    ]
    return OrbitStructure(
        orbits=orbits,
        constituents=constituents,
        pair_kernels=pair_kernels,
        star_kernels=star_kernels,
        pair_invariants=pair_invariants,
        adjacency=adjacency,
        isolated=[not any(row) for row in adjacency],
        factor_invariants=[factor_invariants(c, k) for c, k in zip(constituents, star_kernels)],
    )


def adjacent(A: PermGroup, i: int, j: int) -> bool:
    """Is A_i / A_i^j not an elementary abelian 2-group? (0-based orbit indices)"""
    _require_abelian(A)
    orbits = A.orbits
    if i == j or not (0 <= i < len(orbits) and 0 <= j < len(orbits)):
        raise DomainError(f"orbit indices ({i}, {j}) invalid for {len(orbits)} orbits")
    Ai = restriction(A, orbits[i])
    kernel = restriction(pointwise_stabilizer(A, orbits[j]), orbits[i])
    return not is_elementary_2_invariants(factor_invariants(Ai, kernel))


def isolated(A: PermGroup, i: int) -> bool:
    return not any(adjacent(A, i, j) for j in range(len(A.orbits)) if j != i)


def subdirect_decompose(A: PermGroup, Y: Iterable[int]) -> SubdirectDecomposition:
    """Split A along Y and its complement Z as A|Y[kernel] (+)_phi A|Z[kernel]."""
    ys = sorted(set(Y))
    zs = sorted(set(range(A.degree)) - set(ys))
    if not ys or not zs:
        raise DomainError("both parts of a subdirect decomposition must be nonempty")
    G1 = restriction(A, ys)
    G2 = restriction(A, zs)
    H1 = restriction(pointwise_stabilizer(A, zs), ys)
    H2 = restriction(pointwise_stabilizer(A, ys), zs)
    left, right, seen = [], [], set()
    for sigma in A.sorted_elements():
        l = restrict_perm(sigma, ys)
        key = _coset_key(l, H1)
        if key in seen:
            continue
        seen.add(key)
        left.append(Permutation(l))
        right.append(Permutation(restrict_perm(sigma, zs)))
    iso = FactorIso(tuple(left), tuple(right), tuple(range(len(left))))
    return SubdirectDecomposition(G1, H1, G2, H2, iso, tuple(ys), tuple(zs))


# ----------------------------------------------------------- classification


@dataclass
class OrbitRecord:
    points: tuple[int, ...]
    factor_invariants: list[int]
    factor_elementary_2: bool
    constituent_elementary_2: bool
    isolated: bool

    def to_json(self) -> dict:
        return {
            "points": [x + 1 for x in self.points],
            "size": len(self.points),
            "factor_invariants": self.factor_invariants,
            "factor_elementary_abelian_2": self.factor_elementary_2,
            "constituent_elementary_abelian_2": self.constituent_elementary_2,
            "isolated": self.isolated,
        }


@dataclass
class ClassificationReport:
    degree: int
    order: int
    is_abelian: bool
    is_2_orbit_closed: bool
    orbits: list[OrbitRecord]
    verdict_GR: bool
    verdict_DGR: bool
    witness_graph: ColouredGraph | None = None
    witness_digraph: ColouredGraph | None = None
    oracle: dict | None = field(default=None)

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "order": self.order,
            "is_abelian": self.is_abelian,
            "is_2_orbit_closed": self.is_2_orbit_closed,
            "orbits": [o.to_json() for o in self.orbits],
            "verdict_GR": self.verdict_GR,
            "verdict_DGR": self.verdict_DGR,
            "witness_graph": self.witness_graph.to_json() if self.witness_graph else None,
            "witness_digraph": self.witness_digraph.to_json() if self.witness_digraph else None,
        }
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out


def classify(A: PermGroup, witness: bool = False, check_oracle: bool = False) -> ClassificationReport:
    """Decide A in DGR (2-orbit-closed) and A in GR (plus the orbit condition).

    Trivial groups are decided directly: I_n is in DGR for every n and in GR
    unless n == 2.
    """
    _require_abelian(A)
    info = orbit_structure(A)
    closed = is_2_orbit_closed(A)
    records = []
    for i, orb in enumerate(info.orbits):
        inv = info.factor_invariants[i]
        records.append(
            OrbitRecord(
                points=orb,
                factor_invariants=inv,
                factor_elementary_2=is_elementary_2_invariants(inv),
                constituent_elementary_2=is_elementary_abelian_2(info.constituents[i]),
                isolated=info.isolated[i],
            )
        )
        if closed and info.isolated[i] != records[-1].factor_elementary_2:
            raise AssertionError(f"isolation of orbit {i} disagrees with its factor group")
    orbit_condition = all(
        rec.constituent_elementary_2 or not rec.factor_elementary_2 for rec in records
    )
    verdict_dgr = closed
    if A.is_trivial():
        verdict_gr = A.degree != 2
    else:
        verdict_gr = closed and orbit_condition
    report = ClassificationReport(
        degree=A.degree,
        order=A.order(),
        is_abelian=True,
        is_2_orbit_closed=closed,
        orbits=records,
        verdict_GR=verdict_gr,
        verdict_DGR=verdict_dgr,
    )
    if witness:
        from .synth import synthesize_digraph, synthesize_graph

        if verdict_gr:
            report.witness_graph = synthesize_graph(A)
        if verdict_dgr:
            report.witness_digraph = synthesize_digraph(A)
    if check_oracle:
        star_closed = groups_equal(two_star_closure(A), A)
        two_closed = groups_equal(two_closure(A), A)
        report.oracle = {
            "two_star_closed": star_closed,
            "two_closed": two_closed,
            "agrees": star_closed == verdict_gr and two_closed == verdict_dgr,
        }
    return report
