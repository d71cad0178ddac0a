"""Automorphism groups of coloured graphs.

The engine refines an ordered vertex partition by colour-degree counts until
it is equitable, individualizes a vertex of the smallest non-singleton cell,
and repeats down to a discrete partition (the base path). For every level,
deepest first, it then searches for automorphisms that fix the earlier base
points and move the current one, skipping images already reached by the
generators found so far. The group order is the product of the basic orbit
lengths.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Sequence

import numpy as np

from .cgraph import ColouredGraph
from .errors import CapacityError, DomainError
from .perm import PermGroup, Permutation, generators_from_elements

#: Default bound on the vertex count accepted by ``automorphism_group``.
VERTEX_LIMIT = 64


def is_automorphism(g: ColouredGraph, p: Sequence[int]) -> bool:
    n = g.n
    if len(p) != n:
        raise DomainError(f"permutation of degree {len(p)} applied to a graph on {n} vertices")
    c = g.colours
    for u in range(n):
        row = c[u]
        prow = c[p[u]]
        for v in range(n):
            if prow[p[v]] != row[v]:
                return False
    return True


class _Refiner:
    """Equitable refinement of ordered partitions for one graph."""

    def __init__(self, g: ColouredGraph):
        self.n = n = g.n
        c = g.colours
        codes: dict[tuple[int, int], int] = {}
        self.nbrs = []
        for v in range(n):
            row = []
            for u in range(n):
                if u != v:
                    key = (c[v][u], c[u][v])
                    row.append((u, codes.setdefault(key, len(codes))))
            self.nbrs.append(row)
        # codes are graph-specific, so traces compare the raw colour pairs
        self.code_names = {code: key for key, code in codes.items()}
        if g.directed:
            self.initial = [c[v][v] for v in range(n)]
        else:
            self.initial = [0] * n

    def start(self):
        return _compress(self.initial)

    def refine(self, cell_of: list[int], ncells: int):
        trace = []
        names = self.code_names
        while True:
            keys = []
            for v in range(self.n):
                cnt = Counter((code, cell_of[u]) for u, code in self.nbrs[v])
                sig = tuple(sorted((names[code], cell, k) for (code, cell), k in cnt.items()))
                keys.append((cell_of[v], sig))
            distinct = sorted(set(keys))
            trace.append(tuple(distinct))
            if len(distinct) == ncells:
                return cell_of, ncells, tuple(trace)
            index = {k: i for i, k in enumerate(distinct)}
            cell_of = [index[k] for k in keys]
            ncells = len(distinct)


def _compress(values: Sequence) -> tuple[list[int], int]:
    distinct = sorted(set(values))
    index = {k: i for i, k in enumerate(distinct)}
    return [index[v] for v in values], len(distinct)


def _individualize(cell_of: list[int], v: int) -> tuple[list[int], int]:
    return _compress([2 * c + (0 if u != v else -1) for u, c in enumerate(cell_of)])


def _target_cell(cell_of: list[int]) -> int:
    sizes = Counter(cell_of)
    return min((size, cell) for cell, size in sizes.items() if size > 1)[1]


class _SearchTree:
    """Base path of ``left`` plus the machinery to map it onto ``right``."""

    def __init__(self, left: ColouredGraph, right: ColouredGraph | None = None):
        self.left = left
        self.right = right if right is not None else left
        self.lref = _Refiner(left)
        self.rref = self.lref if right is None else _Refiner(right)
        n = left.n
        cell_of, ncells = self.lref.start()
        cell_of, ncells, self.root_trace = self.lref.refine(cell_of, ncells)
        self.path = [(cell_of, ncells)]
        self.base: list[int] = []
        self.targets: list[int] = []
        self.traces: list[tuple] = []
        while ncells < n:
            tc = _target_cell(cell_of)
            v = min(u for u in range(n) if cell_of[u] == tc)
            self.base.append(v)
            self.targets.append(tc)
            cell_of, ncells = _individualize(cell_of, v)
            cell_of, ncells, trace = self.lref.refine(cell_of, ncells)
            self.traces.append(trace)
            self.path.append((cell_of, ncells))
        self.leaf_vertex_at = [0] * n
        for v, cell in enumerate(cell_of):
            self.leaf_vertex_at[cell] = v

    def _leaf(self, cell_of: list[int]) -> Permutation | None:
        n = self.left.n
        images = [0] * n
        for v, cell in enumerate(cell_of):
            images[self.leaf_vertex_at[cell]] = v
        lc, rc = self.left.colours, self.right.colours
        for u in range(n):
            row, prow = lc[u], rc[images[u]]
            for v in range(n):
                if prow[images[v]] != row[v]:
                    return None
        return Permutation(images)

    def _extend(self, level: int, cell_of: list[int], ncells: int) -> Permutation | None:
        if level == len(self.base):
            return self._leaf(cell_of)
        tc = self.targets[level]
        for w in range(len(cell_of)):
            if cell_of[w] != tc:
                continue
            c2, n2 = _individualize(cell_of, w)
            c2, n2, trace = self.rref.refine(c2, n2)
            if trace != self.traces[level]:
                continue
            found = self._extend(level + 1, c2, n2)
            if found is not None:
                return found
        return None

    def map_base_point(self, level: int, image: int) -> Permutation | None:
        """An automorphism fixing base[:level] and sending base[level] to image."""
        cell_of, _ = self.path[level]
        c2, n2 = _individualize(cell_of, image)
        c2, n2, trace = self.rref.refine(c2, n2)
        if trace != self.traces[level]:
            return None
        return self._extend(level + 1, c2, n2)

    def isomorphism(self) -> Permutation | None:
        cell_of, ncells = self.rref.start()
        cell_of, ncells, trace = self.rref.refine(cell_of, ncells)
        if trace != self.root_trace:
            return None
        return self._extend(0, cell_of, ncells)


def _orbit(point: int, gens: Sequence[Sequence[int]]) -> set[int]:
    orbit = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def automorphism_group(g: ColouredGraph, vertex_limit: int | None = None) -> PermGroup:
    """Aut(g) with generators and exact order; elements are enumerated lazily."""
    limit = VERTEX_LIMIT if vertex_limit is None else vertex_limit
    if g.n > limit:
        raise CapacityError(f"graph has {g.n} vertices, engine limit is {limit}", limit)
    tree = _SearchTree(g)
    gens: list[Permutation] = []
    order = 1
    for level in reversed(range(len(tree.base))):
        cell_of, _ = tree.path[level]
        base_point = tree.base[level]
        orbit = _orbit(base_point, gens)
        for c in range(g.n):
            if cell_of[c] != tree.targets[level] or c in orbit:
                continue
            p = tree.map_base_point(level, c)
            if p is not None:
                gens.append(p)
                orbit = _orbit(base_point, gens)
        order *= len(orbit)
    return PermGroup(g.n, gens, order=order)


def find_isomorphism(g1: ColouredGraph, g2: ColouredGraph) -> Permutation | None:
    """A bijection f with g2[f(u)][f(v)] == g1[u][v], or None."""
    if g1.n != g2.n or g1.directed != g2.directed:
        return None
    if g1.n == 0:
        return Permutation()
    return _SearchTree(g1, g2).isomorphism()


def aut_equals(g: ColouredGraph, G: PermGroup) -> bool:
    """True iff Aut(g) is exactly G."""
    if g.n != G.degree:
        return False
    if not all(is_automorphism(g, p) for p in G.generators):
        return False
    return automorphism_group(g).order() == G.order()


def brute_force_aut(g: ColouredGraph, max_vertices: int = 10) -> PermGroup:
    """Filter all n! permutations; a test oracle independent of the engine."""
    n = g.n
    if n > max_vertices:
        raise CapacityError(f"brute force limited to {max_vertices} vertices", max_vertices)
    C = np.array(g.colours, dtype=np.int64).reshape(n, n)
    perms = itertools.permutations(range(n))
    found: list[tuple[int, ...]] = []
    chunk_size = 50_000
    while True:
        chunk = list(itertools.islice(perms, chunk_size))
        if not chunk:
            break
        P = np.array(chunk, dtype=np.intp).reshape(len(chunk), n)
        ok = (C[P[:, :, None], P[:, None, :]] == C[None, :, :]).all(axis=(1, 2))
        found.extend(tuple(int(x) for x in row) for row in P[ok])
    return PermGroup(n, generators_from_elements(found, n), elements=found)
