"""2-closure, 2*-closure and 2-orbit-closure of permutation groups."""

from __future__ import annotations

from typing import Sequence

from .autgrp import automorphism_group
from .cgraph import orb_digraph, orb_graph
from .errors import CapacityError, DomainError
from .perm import PermGroup, groups_equal, restrict_perm

#: Bound on the number of complete assemblies built by ``two_orbit_closure``.
ASSEMBLY_CAP = 1_000_000


def two_closure(G: PermGroup) -> PermGroup:
    """Aut(Orb(G))."""
    return automorphism_group(orb_digraph(G))


def two_star_closure(G: PermGroup) -> PermGroup:
    """Aut(Orb*(G))."""
    return automorphism_group(orb_graph(G))


def is_2_closed(G: PermGroup) -> bool:
    return groups_equal(two_closure(G), G)


def is_2_star_closed(G: PermGroup) -> bool:
    return groups_equal(two_star_closure(G), G)


class _PairTable:
    """Restrictions of G to single orbits and to unions of two orbits."""

    def __init__(self, G: PermGroup):
        self.G = G
        self.orbits = G.orbits
        self._single: dict[int, set[tuple[int, ...]]] = {}
        self._pairs: dict[tuple[int, int], dict[tuple[int, ...], set[tuple[int, ...]]]] = {}

    def single(self, i: int) -> set[tuple[int, ...]]:
        if i not in self._single:
            orb = self.orbits[i]
            self._single[i] = {restrict_perm(g, orb) for g in self.G.elements}
        return self._single[i]

    def allowed(self, i: int, j: int) -> dict[tuple[int, ...], set[tuple[int, ...]]]:
        """Map restriction-to-X_i -> restrictions-to-X_j of the same elements."""
        if (i, j) not in self._pairs:
            table: dict[tuple[int, ...], set[tuple[int, ...]]] = {}
            oi, oj = self.orbits[i], self.orbits[j]
            for g in self.G.elements:
                table.setdefault(restrict_perm(g, oi), set()).add(restrict_perm(g, oj))
            self._pairs[(i, j)] = table
        return self._pairs[(i, j)]


def two_orbit_compatible(G: PermGroup, s: Sequence[int]) -> bool:
    """Does s agree with some element of G on every union of two orbits?"""
    if len(s) != G.degree:
        raise DomainError(f"permutation of degree {len(s)} vs group of degree {G.degree}")
    orbits = G.orbits
    for orb in orbits:
        if {s[x] for x in orb} != set(orb):
            return False
    if len(orbits) == 1:
        return tuple(s) in G.elements
    table = _PairTable(G)
    parts = [restrict_perm(s, orb) for orb in orbits]
    for i in range(len(orbits)):
        for j in range(i + 1, len(orbits)):
            if parts[j] not in table.allowed(i, j).get(parts[i], ()):
                return False
    return True


def two_orbit_closure(G: PermGroup) -> PermGroup:
    """All permutations that are 2-orbit-compatible with G.

    Assembles one constituent element per orbit, largest orbits first, and
    keeps a partial assembly only while every pair of chosen restrictions
    comes from a common element of G.
    """
    orbits = G.orbits
    if len(orbits) <= 1:
        return G
    table = _PairTable(G)
    order = sorted(range(len(orbits)), key=lambda i: (-len(orbits[i]), i))
    results: list[tuple[int, ...]] = []
    chosen: list[tuple[int, ...]] = []
    degree = G.degree

    def assemble() -> tuple[int, ...]:
        images = [0] * degree
        for i, part in zip(order, chosen):
            orb = orbits[i]
            for local, x in enumerate(orb):
                images[x] = orb[part[local]]
        return tuple(images)

    def extend(k: int) -> None:
        if k == len(order):
            results.append(assemble())
            if len(results) > ASSEMBLY_CAP:
                raise CapacityError(f"2-orbit-closure exceeded {ASSEMBLY_CAP} assemblies", ASSEMBLY_CAP)
            return
        i = order[k]
        candidates = None
        for prev, part in zip(order[:k], chosen):
            allowed = table.allowed(prev, i).get(part, set())
            candidates = set(allowed) if candidates is None else candidates & allowed
            if not candidates:
                return
        if candidates is None:
            candidates = table.single(i)
        for c in sorted(candidates):
            chosen.append(c)
            extend(k + 1)
            chosen.pop()

    extend(0)
    if len(results) == G.order():
        return G
    return PermGroup(degree, list(G.generators) + _extra_generators(G, results), elements=results)


def _extra_generators(G: PermGroup, elements: list[tuple[int, ...]]) -> list:
    """Generators of the closure: G's generators plus greedy additions."""
    gens = list(G.generators)
    span = set(G.elements)
    for e in sorted(elements):
        if e in span:
            continue
        gens.append(e)
        span = set(PermGroup(G.degree, gens).elements)
    return gens[len(G.generators):]


def is_2_orbit_closed(G: PermGroup) -> bool:
    return two_orbit_closure(G).order() == G.order()
