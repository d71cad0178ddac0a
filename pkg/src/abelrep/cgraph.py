"""Complete edge-coloured graphs and digraphs.

A :class:`ColouredGraph` stores a full n x n colour matrix. Undirected graphs
are symmetric and carry ``NO_LOOP`` on the diagonal. Directed graphs may use
the diagonal as a vertex colour (orbital digraphs do); synthesized digraphs
keep ``NO_LOOP`` there so the loop class never counts as a colour.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError
from .perm import PermGroup, Permutation, is_abelian, label_to_point, regular_group

NO_LOOP = -1

#: DOT colours for colour indices 1, 2, 3, ... (colour 0 is never drawn).
DOT_PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan")


@dataclass(frozen=True)
class ColouredGraph:
    directed: bool
    colours: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(c) for c in row) for row in self.colours)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DomainError("colour matrix must be square")
        if not self.directed:
            for u in range(n):
                for v in range(u + 1, n):
                    if rows[u][v] != rows[v][u]:
                        raise DomainError(f"undirected graph has asymmetric colour at ({u}, {v})")
            rows = tuple(
                tuple(NO_LOOP if u == v else c for v, c in enumerate(r)) for u, r in enumerate(rows)
            )
        object.__setattr__(self, "colours", rows)
        used = self.used_colours()
        if used and (min(used) < 0 or max(used) != len(used) - 1):
            raise DomainError(f"colour indices must be exactly 0..k-1, got {sorted(used)}")

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], directed: bool = False) -> "ColouredGraph":
        return cls(directed, tuple(tuple(r) for r in matrix))

    @property
    def n(self) -> int:
        return len(self.colours)

    def used_colours(self) -> set[int]:
        out = set()
        for u, row in enumerate(self.colours):
            for v, c in enumerate(row):
                if u != v or (self.directed and c != NO_LOOP):
                    out.add(c)
        return out

    @property
    def colour_count(self) -> int:
        return len(self.used_colours())

    def relabel(self, mapping: Mapping[int, int] | Sequence[int]) -> "ColouredGraph":
        """Apply ``mapping`` to every colour (NO_LOOP is left alone)."""
        rows = tuple(
            tuple(c if c == NO_LOOP else mapping[c] for c in row) for row in self.colours
        )
        return ColouredGraph(self.directed, rows)

    def permuted(self, f: Sequence[int]) -> "ColouredGraph":
        """The graph transported along the vertex bijection ``f``."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for u in range(n):
            for v in range(n):
                rows[f[u]][f[v]] = self.colours[u][v]
        return ColouredGraph.from_matrix(rows, self.directed)

    def colour_class(self, colour: int) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(self.n)
            if (u != v or self.directed) and self.colours[u][v] == colour and (self.directed or u < v)
        ]

    # -------------------------------------------------------- serialization

    def to_json(self) -> dict:
        return {
            "directed": self.directed,
            "n": self.n,
            "colour_count": self.colour_count,
            "colours": [list(r) for r in self.colours],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ColouredGraph":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid graph JSON: {exc.msg}", exc.lineno, exc.colno) from exc
        try:
            g = cls.from_matrix(data["colours"], bool(data.get("directed", False)))
        except DomainError as exc:
            raise ParseError(f"invalid graph: {exc}") from exc
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"graph JSON needs a 'colours' matrix: {exc}") from exc
        if "n" in data and data["n"] != g.n:
            raise ParseError(f"graph JSON says n={data['n']} but matrix has {g.n} rows")
        return g

    def to_dot(self, name: str = "G") -> str:
        """Graphviz text; colour-0 edges are non-edges and are omitted."""
        kind, arrow = ("digraph", "->") if self.directed else ("graph", "--")
        lines = [f"{kind} {name} {{"]
        for u in range(self.n):
            loop = self.colours[u][u]
            if self.directed and loop != NO_LOOP:
                lines.append(f'  {u + 1} [xlabel="{loop}"];')
            else:
                lines.append(f"  {u + 1};")
        for u in range(self.n):
            for v in range(self.n):
                if u == v or (not self.directed and v < u):
                    continue
                c = self.colours[u][v]
                if c == 0:
                    continue
                colour = DOT_PALETTE[(c - 1) % len(DOT_PALETTE)]
                lines.append(f'  {u + 1} {arrow} {v + 1} [color="{colour}", label="{c}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def colour_degree_tuple(g: ColouredGraph, v: int):
    """Counts of incident edges per colour.

    Undirected graphs give one k-tuple; digraphs give ``(out, in)`` tuples.
    """
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range")
    k = max(g.used_colours(), default=-1) + 1
    out = [0] * k
    inc = [0] * k
    for u in range(g.n):
        if u == v:
            continue
        out[g.colours[v][u]] += 1
        inc[g.colours[u][v]] += 1
    if g.directed:
        return tuple(out), tuple(inc)
    return tuple(out)


# ------------------------------------------------------------- orbitals


def orbital_classes(G: PermGroup, directed: bool, loops: bool = True) -> list[list[tuple[int, int]]]:
    """Orbits of G on ordered pairs (directed) or unordered pairs u < v.

    Classes are ordered by their least pair. ``loops=False`` drops the
    diagonal orbitals of the directed case.
    """
    n = G.degree
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if loops or u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.generators:
        for i, (u, v) in enumerate(pairs):
            a, b = g[u], g[v]
            if not directed and a > b:
                a, b = b, a
            j = index[(a, b)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    classes: dict[int, list[tuple[int, int]]] = {}
    for i, p in enumerate(pairs):
        classes.setdefault(find(i), []).append(p)
    return sorted(classes.values(), key=lambda c: c[0])


def graph_from_classes(
    n: int, classes: Sequence[Sequence[tuple[int, int]]], colour_of_class: Sequence[int], directed: bool
) -> ColouredGraph:
    rows = [[NO_LOOP] * n for _ in range(n)]
    for cls, colour in zip(classes, colour_of_class):
        for u, v in cls:
            rows[u][v] = colour
            if not directed:
                rows[v][u] = colour
    return ColouredGraph.from_matrix(rows, directed)


def orb_digraph(G: PermGroup) -> ColouredGraph:
    """Orb(G): colour classes are the orbitals, diagonal ones included."""
    classes = orbital_classes(G, directed=True)
    return graph_from_classes(G.degree, classes, range(len(classes)), True)


def orb_graph(G: PermGroup) -> ColouredGraph:
    """Orb*(G): colour classes are the orbits on unordered pairs."""
    classes = orbital_classes(G, directed=False)
    return graph_from_classes(G.degree, classes, range(len(classes)), False)


def merge_colours(g: ColouredGraph, merge_map: Mapping[int, int] | Sequence[int]) -> ColouredGraph:
    """Identify colours along a surjection onto 0..k'-1."""
    used = sorted(g.used_colours())
    try:
        image = {merge_map[c] for c in used}
    except (KeyError, IndexError) as exc:
        raise DomainError(f"merge map is not defined on colour {exc}") from exc
    if image != set(range(len(image))):
        raise DomainError(f"merge map is not onto 0..k'-1: image {sorted(image)}")
    return g.relabel(merge_map)


# ------------------------------------------------------------ Cayley graphs


@dataclass(frozen=True)
class ColourPartition:
    """Blocks of connection elements; block i gives colour i + 1."""

    blocks: tuple[tuple[Permutation, ...], ...]
    group_degree: int

    def validate(self, A: PermGroup) -> None:
        seen: set[tuple[int, ...]] = set()
        for block in self.blocks:
            if not block:
                raise DomainError("empty block in colour partition")
            for g in block:
                if len(g) != self.group_degree or g not in A:
                    raise DomainError(f"block element {g!r} is not in the group")
                if g.is_identity():
                    raise DomainError("colour partition contains the identity")
                if g in seen:
                    raise DomainError("colour partition blocks overlap")
                if g.inverse() in seen:
                    raise DomainError("colour partition lists both g and g^-1")
                seen.add(g)
        pairs_total = len({min(g, g.inverse()) for g in A.elements if not g.is_identity()})
        if len(seen) >= pairs_total:
            raise DomainError("colour partition must leave some pair {g, g^-1} for colour 0")


def cayley_star(A: PermGroup, pi: ColourPartition) -> ColouredGraph:
    """Cay*(A; Pi) for a regular abelian A, points identified with A via point 0."""
    if not A.is_transitive() or not is_abelian(A) or A.order() != A.degree:
        raise DomainError("cayley_star needs a regular abelian group")
    pi.validate(A)
    n = A.degree
    rows = [[0] * n for _ in range(n)]
    for b, block in enumerate(pi.blocks):
        for g in block:
            for u in range(n):
                v = g[u]
                rows[u][v] = rows[v][u] = b + 1
    return ColouredGraph.from_matrix(rows, directed=False)


def label_partition(orders: Sequence[int], blocks: Iterable[Iterable[str] | str]) -> tuple[PermGroup, ColourPartition]:
    """Build (Z_{k1} x ... , Pi) from element labels such as ``["10", ["01", "11"]]``."""
    A = regular_group(orders)
    by_point = {g[0]: g for g in A.elements}
    out = []
    for block in blocks:
        labels = [block] if isinstance(block, str) else list(block)
        out.append(tuple(by_point[label_to_point(orders, lab)] for lab in labels))
    return A, ColourPartition(tuple(out), A.degree)


def cayley_star_labels(orders: Sequence[int], blocks: Iterable[Iterable[str] | str]) -> ColouredGraph:
    """``cayley_star`` with connection elements written as coordinate strings."""
    A, pi = label_partition(orders, blocks)
    return cayley_star(A, pi)


def degree_profile(g: ColouredGraph, vertices: Iterable[int]) -> Counter:
    return Counter(colour_degree_tuple(g, v) for v in vertices)
