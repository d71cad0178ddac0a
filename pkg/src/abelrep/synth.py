"""Witness graphs and digraphs for abelian permutation groups.

Single orbits are served by a small catalogue of Cayley colour graphs or by
exhaustive colour-merge search over the orbital graph. Intransitive groups
are built by induction on the number of orbits: split off one orbit (or an
adjacent pair), represent the rest by its 2-orbit-closure, and join the parts
with colour-1 edges that pair up kernel cosets. Every result is checked by the
automorphism engine before it is returned.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .autgrp import aut_equals, automorphism_group, find_isomorphism, is_automorphism
from .cgraph import (
    NO_LOOP,
    ColouredGraph,
    cayley_star_labels,
    graph_from_classes,
    orbital_classes,
)
from .closure import is_2_orbit_closed, two_orbit_closure
from .errors import CapacityError, DomainError, SynthesisError
from .iso import permutation_isomorphism
from .perm import (
    PermGroup,
    Permutation,
    is_abelian,
    is_elementary_abelian_2,
    parallel_sum,
    plus_group,
    regular_group,
    restrict_perm,
    restriction,
    translation,
    trivial_group,
)
from .structure import factor_invariants, is_elementary_2_invariants, orbit_structure

#: Largest number of colour partitions ``colour_merge_search`` will enumerate.
MERGE_GUARD = 500_000

MAX_COLOURS = 4


# ---------------------------------------------------------------- catalogue


@dataclass(frozen=True)
class CatalogueEntry:
    name: str
    graph: ColouredGraph
    expected_group: PermGroup
    source: str
    line_styles: tuple[str, ...] = ()
    aliases: tuple[str, ...] = ()

    def verify(self) -> bool:
        return aut_equals(self.graph, self.expected_group)

    def to_json(self, verified: bool | None = None) -> dict:
        out = {
            "name": self.name,
            "aliases": list(self.aliases),
            "source": self.source,
            "n": self.graph.n,
            "directed": self.graph.directed,
            "colour_count": self.graph.colour_count,
            "expected_order": self.expected_group.order(),
            "line_styles": list(self.line_styles),
            "graph": self.graph.to_json(),
        }
        if verified is not None:
            out["verified"] = verified
        return out


def _glue(*parts: Sequence[int]) -> Permutation:
    """Concatenate permutations acting on consecutive blocks of points."""
    images: list[int] = []
    for p in parts:
        offset = len(images)
        images.extend(offset + x for x in p)
    return Permutation(images)


def _two_component_graph(
    first: ColouredGraph, second: ColouredGraph, cross
) -> ColouredGraph:
    n1, n2 = first.n, second.n
    n = n1 + n2
    rows = [[0] * n for _ in range(n)]
    for u in range(n1):
        for v in range(n1):
            rows[u][v] = first.colours[u][v]
    for u in range(n2):
        for v in range(n2):
            rows[n1 + u][n1 + v] = second.colours[u][v]
    for u in range(n1):
        for v in range(n2):
            rows[u][n1 + v] = rows[n1 + v][u] = cross(u, v)
    return ColouredGraph.from_matrix(rows)


def _fig3_graph(second_blocks=("11", "01")) -> tuple[ColouredGraph, PermGroup]:
    """Z3^2[Z3] (+) Z3^2[Z3] with kernel <10> on both orbits.

    Cross edges u - v' get colour 3 when the second coordinates agree and
    colour 1 when v' is one step ahead. The second component must not use the
    kernel direction 10 as a colour, otherwise x -> -x on that component alone
    is an extra automorphism (this is what happens with blocks 10, 01).
    """
    orders = (3, 3)
    first = cayley_star_labels(orders, ["01", "11", "10"])
    second = cayley_star_labels(orders, list(second_blocks))

    def cross(u: int, v: int) -> int:
        uy, vy = u % 3, v % 3
        if uy == vy:
            return 3
        if vy == (uy + 1) % 3:
            return 1
        return 0

    g = _two_component_graph(first, second, cross)
    ident = Permutation.identity(9)
    t10, t01 = translation(orders, (1, 0)), translation(orders, (0, 1))
    group = PermGroup(18, [_glue(t10, ident), _glue(ident, t10), _glue(t01, t01)])
    return g, group


def _parallel_z3_2_graph(shifted: bool = True) -> tuple[ColouredGraph, PermGroup]:
    """2~Z3^2: colour 1 matches x with x', colour 2 matches x with (x + 10)'.

    Without the shifted matching, inverting both components at once is an
    automorphism and Aut has order 18.
    """
    orders = (3, 3)
    first = cayley_star_labels(orders, ["10", "01", "11"])
    second = cayley_star_labels(orders, ["01", "10"])
    t10 = translation(orders, (1, 0))

    def cross(u: int, v: int) -> int:
        if u == v:
            return 1
        return 2 if shifted and v == t10[u] else 0

    g = _two_component_graph(first, second, cross)
    return g, parallel_sum(regular_group(orders), 2)


def uncorrected_two_orbit_graphs() -> dict[str, ColouredGraph]:
    """The two-orbit Z3^2 graphs exactly as first transcribed, before correction.

    Kept for regression tests: their automorphism groups are strictly larger
    than the intended ones (orders 54 and 18).
    """
    return {
        "fig3": _fig3_graph(("10", "01"))[0],
        "par_z3_2": _parallel_z3_2_graph(shifted=False)[0],
    }


def _delta() -> tuple[ColouredGraph, PermGroup]:
    orders = (3, 3)
    n = 9
    rows = [[0] * n for _ in range(n)]
    for colour, shift in ((1, (1, 0)), (2, (0, 1))):
        t = translation(orders, shift)
        for x in range(n):
            rows[x][t[x]] = colour
    for x in range(n):
        rows[x][x] = NO_LOOP
    return ColouredGraph.from_matrix(rows, directed=True), regular_group(orders)


def _cayley_entry(name, orders, blocks, plus, source, styles, aliases=()) -> CatalogueEntry:
    g = cayley_star_labels(orders, blocks)
    A = regular_group(orders)
    return CatalogueEntry(name, g, plus_group(A) if plus else A, source, styles, aliases)


@functools.lru_cache(maxsize=None)
def _catalogue() -> tuple[CatalogueEntry, ...]:
    regular = "regular action of its defining group"
    plus = "regular group extended by its inversion map"
    entries = [
        _cayley_entry("z2_2", (2, 2), ["10", "01"], False, f"Cay*(Z2^2; 10, 01), {regular}", ("solid", "dashed")),
        _cayley_entry(
            "z2_3", (2, 2, 2), ["100", "010", "001"], False,
            f"Cay*(Z2^3; 100, 010, 001), {regular}", ("solid", "dashed", "dotted"),
        ),
        _cayley_entry(
            "z2_4", (2, 2, 2, 2), ["1000", ["0100", "1010"], ["0010", "0001"]], False,
            f"Cay*(Z2^4; 1000, [0100, 1010], [0010, 0001]), {regular}",
            ("solid", "dashed", "dotted"), aliases=("fig1",),
        ),
        _cayley_entry("z4_z2", (4, 2), ["10", "01"], True, f"Cay*(Z4 x Z2; 10, 01), {plus}", ()),
        _cayley_entry(
            "z4_z2_2", (4, 2, 2), ["001", "011", ["100", "010"]], True,
            f"Cay*(Z4 x Z2^2; 001, 011, [100, 010]), {plus}", (),
        ),
        _cayley_entry(
            "z3_2_plus", (3, 3), ["10", "01", "11"], True, f"Cay*(Z3^2; 10, 01, 11), {plus}", (),
        ),
        _cayley_entry(
            "z3_3_plus", (3, 3, 3), ["010", ["001", "100"], ["110", "101"]], True,
            f"Cay*(Z3^3; 010, [001, 100], [110, 101]), {plus}", (),
        ),
        _cayley_entry("z4_2_plus", (4, 4), ["10", "01", "13"], True, f"Cay*(Z4^2; 10, 01, 13), {plus}", ()),
    ]
    g, grp = _fig3_graph()
    entries.append(
        CatalogueEntry(
            "fig3", g, grp,
            "Z3^2[Z3] (+) Z3^2[Z3]: Cay*(Z3^2; 01, 11, 10) and Cay*(Z3^2; 11, 01) joined by colours 3 and 1",
            ("dashed", "dotted", "solid"),
        )
    )
    g, grp = _parallel_z3_2_graph()
    entries.append(
        CatalogueEntry(
            "par_z3_2", g, grp,
            "parallel sum of two Z3^2: Cay*(Z3^2; 10, 01, 11) and Cay*(Z3^2; 01, 10), "
            "matched in colour 1 and with shift 10 in colour 2",
        )
    )
    g, grp = _delta()
    entries.append(
        CatalogueEntry(
            "delta", g, grp, "digraph on Z3^2 with arcs x -> x+10 and x -> x+01 in two colours",
            ("solid", "dashed"),
        )
    )
    return tuple(entries)


def catalogue() -> list[CatalogueEntry]:
    return list(_catalogue())


def catalogue_entry(name: str) -> CatalogueEntry:
    for e in _catalogue():
        if name == e.name or name in e.aliases:
            return e
    raise DomainError(f"no catalogue entry named {name!r}")


_PLUS_EXCEPTIONS = {
    (2, 2): "z2_2",
    (2, 2, 2): "z2_3",
    (2, 2, 2, 2): "z2_4",
    (2, 4): "z4_z2",
    (2, 2, 4): "z4_z2_2",
    (3, 3): "z3_2_plus",
    (3, 3, 3): "z3_3_plus",
    (4, 4): "z4_2_plus",
}

_DIGRAPH_EXCEPTIONS = {(2, 2): "z2_2", (2, 2, 2): "z2_3", (2, 2, 2, 2): "z2_4", (3, 3): "delta"}


def _regular_part(G: PermGroup) -> PermGroup:
    # plus groups are built as <A, alpha> with alpha listed last
    return PermGroup(G.degree, list(G.generators[:-1]))


def _transport(entry: CatalogueEntry, A: PermGroup, directed: bool = False) -> ColouredGraph:
    base = entry.expected_group if is_abelian(entry.expected_group) else _regular_part(entry.expected_group)
    f = permutation_isomorphism(base, A)
    if f is None:
        raise SynthesisError(f"group is not permutation isomorphic to catalogue entry {entry.name}")
    g = entry.graph
    if directed and not g.directed:
        g = ColouredGraph(True, g.colours)
    return g.permuted(f)


# ------------------------------------------------------- colour merge search


def _stirling_total(m: int, k: int) -> int:
    """Number of set partitions of m items into at most k blocks."""
    row = [1] + [0] * k
    for _ in range(m):
        new = [0] * (k + 1)
        for j in range(1, k + 1):
            new[j] = j * row[j] + row[j - 1]
        row = new
    return sum(row[1:]) if m else 1


def restricted_growth_strings(m: int, k: int, min_blocks: int = 1) -> Iterator[tuple[int, ...]]:
    """Set partitions of m items into min_blocks..k blocks, lexicographic order."""
    if m == 0:
        if min_blocks <= 0 or k >= 0:
            yield ()
        return
    s = [0] * m

    def rec(i: int, top: int):
        if i == m:
            if top + 1 >= min_blocks:
                yield tuple(s)
            return
        if top + 1 + (m - i) < min_blocks:
            return
        for c in range(min(top + 2, k)):
            s[i] = c
            yield from rec(i + 1, max(top, c))

    yield from rec(1, 0)


def _orbital_classes_for_merge(G: PermGroup, directed: bool):
    return orbital_classes(G, directed, loops=False)


def _merge_graph(n, classes, colouring, directed) -> ColouredGraph:
    return graph_from_classes(n, classes, colouring, directed)


def colour_merge_search(
    G: PermGroup,
    directed: bool = False,
    max_colours: int = MAX_COLOURS,
    *,
    min_colours: int = 1,
    guard: int = MERGE_GUARD,
) -> ColouredGraph | None:
    """First merge of Orb*(G) (or loopless Orb(G)) into <= max_colours classes with Aut = G.

    Partitions of the pair classes are enumerated as restricted growth
    strings in lexicographic order, so class 0 always lands in colour 0.
    None means no such merge exists. Extra automorphisms found along the way
    are kept and used to discard later candidates without a full search.
    """
    n = G.degree
    classes = _orbital_classes_for_merge(G, directed)
    m = len(classes)
    if m == 0:
        g = ColouredGraph.from_matrix([[NO_LOOP] * n for _ in range(n)], directed)
        return g if aut_equals(g, G) else None
    total = _stirling_total(m, max_colours)
    if total > guard:
        raise CapacityError(f"{total} colour partitions exceed the search guard {guard}", guard)
    finest = _merge_graph(n, classes, list(range(m)), directed)
    if automorphism_group(finest).order() != G.order():
        return None
    members = G.elements
    witnesses: list[Permutation] = []
    for s in restricted_growth_strings(m, max_colours, min_colours):
        g = _merge_graph(n, classes, s, directed)
        if any(is_automorphism(g, w) for w in witnesses):
            continue
        aut = automorphism_group(g)
        if aut.order() == G.order():
            return g
        witnesses.extend(p for p in aut.generators if p not in members)
    return None


def count_merge_candidates(G: PermGroup, directed: bool, max_colours: int) -> int:
    return _stirling_total(len(_orbital_classes_for_merge(G, directed)), max_colours)


def min_colour_count(G: PermGroup, directed: bool = False, guard: int = MERGE_GUARD) -> int | None:
    """Least k such that some merge of the orbital classes into k colours has Aut = G."""
    classes = _orbital_classes_for_merge(G, directed)
    if not classes:
        return 0 if aut_equals(ColouredGraph.from_matrix([[NO_LOOP] * G.degree] * G.degree, directed), G) else None
    for k in range(1, len(classes) + 1):
        g = colour_merge_search(G, directed, k, min_colours=k, guard=guard)
        if g is not None:
            return k
        if k == 1 and automorphism_group(
            _merge_graph(G.degree, classes, list(range(len(classes))), directed)
        ).order() != G.order():
            return None
    return None


def min_colour_graph(G: PermGroup, directed: bool = False, guard: int = MERGE_GUARD) -> ColouredGraph | None:
    """First merge with Aut = G using the fewest colours, up to four."""
    for k in range(1, MAX_COLOURS + 1):
        g = colour_merge_search(G, directed, k, min_colours=k, guard=guard)
        if g is not None:
            return g
    return None


# ------------------------------------------------------------ single orbits


def _single_vertex(directed: bool) -> ColouredGraph:
    return ColouredGraph.from_matrix([[NO_LOOP]], directed)


def _require_regular_abelian(A: PermGroup) -> None:
    if not (A.is_transitive() and is_abelian(A)) or A.order() != A.degree:
        raise DomainError("expected a transitive (hence regular) abelian group")


def _invariants(A: PermGroup) -> tuple[int, ...]:
    return tuple(factor_invariants(A, trivial_group(A.degree)))


def represent_regular_plus(A: PermGroup) -> ColouredGraph:
    """Undirected graph with Aut = <A, inversion> for a regular abelian A."""
    _require_regular_abelian(A)
    if A.degree == 1:
        return _single_vertex(False)
    name = _PLUS_EXCEPTIONS.get(_invariants(A))
    if name is not None:
        return _transport(catalogue_entry(name), A)
    g = min_colour_graph(plus_group(A), False)
    if g is None:
        raise SynthesisError(f"no representation with at most {MAX_COLOURS} colours found for A+")
    return g


def represent_regular_digraph(A: PermGroup) -> ColouredGraph:
    """Digraph with Aut = A for a regular abelian A."""
    _require_regular_abelian(A)
    if A.degree == 1:
        return _single_vertex(True)
    name = _DIGRAPH_EXCEPTIONS.get(_invariants(A))
    if name is not None:
        return _transport(catalogue_entry(name), A, directed=True)
    g = min_colour_graph(A, True)
    if g is None:
        raise SynthesisError(f"no digraph with at most {MAX_COLOURS} colours found for A")
    return g


# ---------------------------------------------------------------- assembly


def _pair_orbit(A: PermGroup, u: int, v: int) -> set[tuple[int, int]]:
    return {(g[u], g[v]) for g in A.elements}


def _injections(colours: list[int]) -> list[dict[int, int]]:
    """Every injective recolouring of ``colours`` into 0..3, identity first."""
    out = []
    for target in itertools.permutations(range(MAX_COLOURS), len(colours)):
        out.append(dict(zip(colours, target)))
    ident = {c: c for c in colours}
    if ident in out:
        out.remove(ident)
        out.insert(0, ident)
    return out


@dataclass
class _Part:
    points: tuple[int, ...]
    graph: ColouredGraph

    def colours(self) -> list[int]:
        return sorted(self.graph.used_colours())


def _connected_in(part: _Part, mapping: dict[int, int], allowed=(2, 3)) -> bool:
    g = part.graph
    n = g.n
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in range(n):
            if v in seen or v == u:
                continue
            if mapping[g.colours[u][v]] in allowed or mapping[g.colours[v][u]] in allowed:
                seen.add(v)
                stack.append(v)
    return len(seen) == n


def _compact(rows: list[list[int]], directed: bool) -> ColouredGraph:
    n = len(rows)
    used = sorted({rows[u][v] for u in range(n) for v in range(n) if u != v})
    index = {c: i for i, c in enumerate(used)}
    out = [[NO_LOOP if u == v else index[rows[u][v]] for v in range(n)] for u in range(n)]
    return ColouredGraph.from_matrix(out, directed)


def _assemble(n: int, parts: list[_Part], maps: list[dict[int, int]], cross: dict, directed: bool) -> ColouredGraph:
    rows = [[0] * n for _ in range(n)]
    for part, mapping in zip(parts, maps):
        pts = part.points
        c = part.graph.colours
        for a, u in enumerate(pts):
            for b, v in enumerate(pts):
                if a != b:
                    rows[u][v] = mapping[c[a][b]]
    for (u, v), colour in cross.items():
        rows[u][v] = colour
        if not directed:
            rows[v][u] = colour
    return _compact(rows, directed)


def _search_relabelings(
    A: PermGroup,
    parts: list[_Part],
    cross: dict,
    directed: bool,
    preferred=None,
) -> ColouredGraph:
    """Try recolourings of the parts, preferred ones first, until Aut = A."""
    n = A.degree
    options = [_injections(p.colours()) for p in parts]
    combos = list(itertools.product(*options))
    if preferred is not None:
        combos.sort(key=lambda maps: not preferred(maps))
    for maps in combos:
        g = _assemble(n, parts, list(maps), cross, directed)
        if g.colour_count <= MAX_COLOURS and aut_equals(g, A):
            return g
    raise SynthesisError("no recolouring of the components gives the required automorphism group")


def _local(A: PermGroup, points: Sequence[int]) -> PermGroup:
    return restriction(A, points)


def _lift(g: ColouredGraph, points: Sequence[int]) -> _Part:
    return _Part(tuple(points), g)


# ------------------------------------------------------------- two orbits


def _condition_two(info) -> bool:
    for inv, constituent in zip(info.factor_invariants, info.constituents):
        if is_elementary_2_invariants(inv) and not is_elementary_abelian_2(constituent):
            return False
    return True


def two_orbit_graph(A: PermGroup, decomp=None) -> ColouredGraph:
    """Undirected witness for an abelian group with exactly two orbits."""
    if not is_abelian(A):
        raise DomainError("two_orbit_graph needs an abelian group")
    orbits = A.orbits
    if len(orbits) != 2:
        raise DomainError(f"two_orbit_graph needs exactly two orbits, got {len(orbits)}")
    if A.is_trivial():
        raise DomainError("the trivial group on two points has no graph representation")
    info = orbit_structure(A)
    if not _condition_two(info):
        raise DomainError("group violates the orbit condition for graph representability")
    O, Q = orbits
    B, C = info.constituents
    adj = info.adjacency[0][1]
    if adj and _invariants(B) == (3, 3) and _invariants(C) == (3, 3):
        name = "fig3" if info.pair_kernels[0, 1].order() == 3 else "par_z3_2"
        return _transport(catalogue_entry(name), A)
    gamma1 = _lift(represent_regular_plus(B), O)
    gamma2 = _lift(represent_regular_plus(C), Q)
    cross = {pair: 1 for pair in _pair_orbit(A, O[0], Q[0])}
    if adj:
        kernel = info.pair_kernels[0, 1].elements
        sigma = next(
            s for s in A.sorted_elements() if restrict_perm(s * s, O) not in kernel
        )
        for pair in _pair_orbit(A, O[0], sigma[Q[0]]):
            cross[pair] = 2
    # prefer recolourings that separate the orbits by colour-degree profile
    sizes = (len(O), len(Q))

    def separates(maps) -> bool:
        return _profile(gamma1, maps[0], cross, sizes[1], True) != _profile(gamma2, maps[1], cross, sizes[0], False)

    return _search_relabelings(A, [gamma1, gamma2], cross, False, separates)


def _profile(part: _Part, mapping, cross, other_size, first) -> tuple:
    """Colour-degree tuple of a vertex of ``part`` in the assembled graph."""
    u = part.points[0]
    counts = [0] * MAX_COLOURS
    c = part.graph.colours
    for b in range(1, part.graph.n):
        counts[mapping[c[0][b]]] += 1
    cross_counts = [0] * MAX_COLOURS
    for (x, y), colour in cross.items():
        if x == u or y == u:
            cross_counts[colour] += 1
    cross_counts[0] += other_size - sum(cross_counts)
    return tuple(a + b for a, b in zip(counts, cross_counts))


# --------------------------------------------------------------- induction


def _trivial_graph(n: int) -> ColouredGraph:
    if n == 2:
        raise DomainError("the trivial group on two points has no graph representation")
    if n <= 1:
        return ColouredGraph.from_matrix([[NO_LOOP] * n for _ in range(n)])
    rows = [[0] * n for _ in range(n)]
    if n == 3:
        rows[0][1] = rows[1][0] = 1
        rows[1][2] = rows[2][1] = 2
        return _compact(rows, False)
    for u in range(n - 1):
        rows[u][u + 1] = rows[u + 1][u] = 1
    rows[0][2] = rows[2][0] = 2
    return _compact(rows, False)


def _trivial_digraph(n: int) -> ColouredGraph:
    rows = [[0] * n for _ in range(n)]
    for u in range(n - 1):
        rows[u][u + 1] = 1
    for u in range(n):
        rows[u][u] = NO_LOOP
    return ColouredGraph.from_matrix(rows, directed=True)


def _star_condition(info, i: int) -> bool:
    """Splitting off orbit i keeps isolation unchanged and leaves a nontrivial rest."""
    r = len(info.orbits)
    rest = [j for j in range(r) if j != i]
    if all(len(info.orbits[j]) == 1 for j in rest):
        return False
    for j in rest:
        row = info.adjacency[j]
        if row[i] and not any(row[k] for k in rest if k != j):
            return False
    return True


def _choose_split(info) -> list[tuple[int, ...]]:
    """Orbit indices to split off, in policy order."""
    r = len(info.orbits)
    choices: list[tuple[int, ...]] = []
    fixed = [i for i in range(r) if len(info.orbits[i]) == 1]
    iso = [i for i in range(r) if info.isolated[i]]
    star = [i for i in range(r) if _star_condition(info, i)]
    for group in (fixed, iso, star):
        for i in group:
            if _star_condition(info, i) and (i,) not in choices:
                choices.append((i,))
                break
    for i in range(r):
        for j in range(i + 1, r):
            if info.adjacency[i][j]:
                choices.append((i, j))
                break
        else:
            continue
        break
    return choices


def _cross_joins(A: PermGroup, sources: Sequence[Sequence[int]], targets: Sequence[Sequence[int]], colour: int) -> dict:
    cross = {}
    for src in sources:
        for tgt in targets:
            for pair in _pair_orbit(A, src[0], tgt[0]):
                cross[pair] = colour
    return cross


def _synth_graph(A: PermGroup) -> ColouredGraph:
    orbits = A.orbits
    r = len(orbits)
    if A.is_trivial():
        return _trivial_graph(A.degree)
    if r == 1:
        return represent_regular_plus(A)
    if r == 2:
        return two_orbit_graph(A)
    info = orbit_structure(A)
    failures = []
    for split in _choose_split(info):
        try:
            return _split_graph(A, info, split)
        except SynthesisError as exc:
            failures.append(f"{[i + 1 for i in split]}: {exc}")
    raise SynthesisError("every orbit split failed: " + "; ".join(failures))


def _split_graph(A: PermGroup, info, split: tuple[int, ...]) -> ColouredGraph:
    orbits = info.orbits
    first_orbits = [orbits[i] for i in split]
    rest_orbits = [orb for k, orb in enumerate(orbits) if k not in split]
    first_pts = sorted(x for orb in first_orbits for x in orb)
    rest_pts = sorted(x for orb in rest_orbits for x in orb)
    if len(split) == 1:
        gamma1 = represent_regular_plus(_local(A, first_pts))
    else:
        gamma1 = two_orbit_graph(_local(A, first_pts))
    closure = two_orbit_closure(_local(A, rest_pts))
    gamma2 = _synth_graph(closure)
    p1, p2 = _lift(gamma1, first_pts), _lift(gamma2, rest_pts)
    cross = _cross_joins(A, first_orbits, rest_orbits, 1)

    paired_split = False
    if len(split) == 2 and len(orbits) == 4 and gamma1.n == gamma2.n:
        paired_split = find_isomorphism(gamma1, gamma2) is not None
    inner1 = _inner_cross_colours(gamma1, [orbits[i] for i in split], first_pts)
    inner2 = _inner_cross_colours(gamma2, rest_orbits, rest_pts)

    def preferred(maps) -> bool:
        ok = _connected_in(p1, maps[0]) and _connected_in(p2, maps[1])
        if ok and paired_split:
            ok = {maps[0][c] for c in inner1} <= {0, 1, 2} and {maps[1][c] for c in inner2} <= {1, 2, 3}
        return ok

    return _search_relabelings(A, [p1, p2], cross, False, preferred)


def _inner_cross_colours(g: ColouredGraph, orbits, points) -> set[int]:
    """Colours on edges between different orbits inside a component graph."""
    local = {x: k for k, x in enumerate(points)}
    label = {}
    for idx, orb in enumerate(orbits):
        for x in orb:
            label[local[x]] = idx
    return {
        g.colours[u][v] for u in range(g.n) for v in range(g.n) if u != v and label[u] != label[v]
    }


def synthesize_graph(A: PermGroup, check: bool = True) -> ColouredGraph:
    """Coloured graph with Aut = A and at most four colours."""
    if not is_abelian(A):
        raise DomainError("synthesis needs an abelian group")
    if check:
        from .structure import classify

        if not classify(A).verdict_GR:
            raise DomainError("group is not the automorphism group of any coloured graph")
    g = _synth_graph(A)
    if g.colour_count > MAX_COLOURS or not aut_equals(g, A):
        raise SynthesisError("internal error: synthesized graph failed verification")
    return g


# ----------------------------------------------------------------- digraphs


def _synth_digraph(A: PermGroup) -> ColouredGraph:
    orbits = A.orbits
    if A.is_trivial():
        return _trivial_digraph(A.degree)
    if len(orbits) == 1:
        return represent_regular_digraph(A)
    first = orbits[0]
    rest_orbits = orbits[1:]
    rest_pts = sorted(x for orb in rest_orbits for x in orb)
    gamma1 = represent_regular_digraph(_local(A, first))
    gamma2 = _synth_digraph(two_orbit_closure(_local(A, rest_pts)))
    p1, p2 = _lift(gamma1, first), _lift(gamma2, rest_pts)
    cross = _cross_joins(A, [first], rest_orbits, 1)

    def preferred(maps) -> bool:
        return _connected_in(p1, maps[0]) and _connected_in(p2, maps[1])

    return _search_relabelings(A, [p1, p2], cross, True, preferred)


def synthesize_digraph(A: PermGroup, check: bool = True) -> ColouredGraph:
    """Coloured digraph with Aut = A and at most four colours."""
    if not is_abelian(A):
        raise DomainError("synthesis needs an abelian group")
    if check and not is_2_orbit_closed(A):
        raise DomainError("group is not 2-orbit-closed, so no digraph represents it")
    g = _synth_digraph(A)
    if g.colour_count > MAX_COLOURS or not aut_equals(g, A):
        raise SynthesisError("internal error: synthesized digraph failed verification")
    return g
