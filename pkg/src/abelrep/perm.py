"""Permutations, permutation groups and the sum constructions.

Points are 0-based internally. Every textual form (cycle notation, labels in
JSON output) is 1-based.

Composition follows function composition: ``(p * q)(x) == p(q(x))``, so
``q`` acts first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError, ParseError

#: Default bound on the number of enumerated group elements.
ELEMENT_CAP = 20_000


class Permutation(tuple):
    """An immutable bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        return super().__new__(cls, images)

    @classmethod
    def checked(cls, images: Iterable[int]) -> "Permutation":
        p = cls(images)
        if sorted(p) != list(range(len(p))):
            raise DomainError(f"not a bijection on {len(p)} points: {list(p)}")
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):  # type: ignore[override]
        if not isinstance(other, tuple) or len(other) != len(self):
            return NotImplemented
        return Permutation([self[i] for i in other])

    def __rmul__(self, other):  # type: ignore[override]
        return NotImplemented

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, n={len(self)})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """Plain-tuple composition ``p o q`` used on hot paths."""
    return tuple([p[i] for i in q])


# ---------------------------------------------------------------- cycle text

_CYCLE_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint cycles of 1-based points, e.g. ``"(1 2 3)(4 5 6)"``.

    Points inside a cycle may be separated by spaces or commas. Points not
    mentioned are fixed; the empty string is the identity.
    """
    images = list(range(degree))
    used: set[int] = set()
    current: list[int] | None = None
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _CYCLE_TOKEN.match(text, pos)
        if m is None:
            break
        opening, closing, number, comma, other = m.groups()
        col = m.start(m.lastindex) + 1
        pos = m.end()
        if other is not None:
            raise ParseError(f"unexpected token {other!r} in cycle notation", 1, col)
        if opening:
            if current is not None:
                raise ParseError("nested '(' in cycle notation", 1, col)
            current = []
        elif closing:
            if current is None:
                raise ParseError("unbalanced ')' in cycle notation", 1, col)
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        elif comma:
            if current is None:
                raise ParseError("',' outside a cycle", 1, col)
        else:
            if current is None:
                raise ParseError(f"point {number} outside a cycle", 1, col)
            point = int(number)
            if not 1 <= point <= degree:
                raise ParseError(f"point {point} out of range 1..{degree}", 1, col)
            if point - 1 in used:
                raise ParseError(f"repeated point {point}", 1, col)
            used.add(point - 1)
            current.append(point - 1)
    if current is not None:
        raise ParseError("unterminated cycle: missing ')'", 1, len(text) + 1)
    return Permutation(images)


def format_cycles(p: Sequence[int]) -> str:
    """1-based cycle notation; ``"()"`` for the identity."""
    cycles = Permutation(p).cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycles)


# ------------------------------------------------------------------ groups


class PermGroup:
    """A permutation group given by generators, with lazy element enumeration.

    ``order`` may be supplied when it is known by other means (the
    automorphism engine computes it from a stabiliser chain); the element set
    is then only enumerated on demand.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Sequence[int]] = (),
        *,
        elements: Iterable[Sequence[int]] | None = None,
        order: int | None = None,
    ):
        self.degree = degree
        gens = []
        for g in generators:
            g = Permutation(g)
            if len(g) != degree:
                raise DomainError(f"generator of degree {len(g)} in a group of degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._elements: frozenset[Permutation] | None = None
        if elements is not None:
            self._elements = frozenset(Permutation(e) for e in elements)
            order = len(self._elements)
        self._order = order
        self._orbits: list[tuple[int, ...]] | None = None
        self._sorted: list[Permutation] | None = None

    def __repr__(self) -> str:
        gens = ", ".join(format_cycles(g) for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, gens=[{gens}])"

    @property
    def elements(self) -> frozenset[Permutation]:
        if self._elements is None:
            self._elements = frozenset(
                Permutation(e) for e in _enumerate(self.generators, self.degree, ELEMENT_CAP)
            )
            self._order = len(self._elements)
        return self._elements

    def sorted_elements(self) -> list[Permutation]:
        if self._sorted is None:
            self._sorted = sorted(self.elements)
        return self._sorted

    def order(self) -> int:
        if self._order is None:
            return len(self.elements)
        return self._order

    def __contains__(self, p) -> bool:
        return tuple(p) in self.elements

    def __iter__(self):
        return iter(self.sorted_elements())

    @property
    def orbits(self) -> list[tuple[int, ...]]:
        """Orbit partition, each orbit sorted, orbits ordered by least point."""
        if self._orbits is None:
            self._orbits = _orbits(self.degree, self.generators)
        return self._orbits

    def is_trivial(self) -> bool:
        return not self.generators

    def is_transitive(self) -> bool:
        return len(self.orbits) <= 1


def _enumerate(gens: Sequence[Sequence[int]], degree: int, cap: int) -> set[tuple[int, ...]]:
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = tuple([g[i] for i in x])
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
                    if len(seen) > cap:
                        raise CapacityError(
                            f"group enumeration exceeded the element cap of {cap}", cap
                        )
        frontier = fresh
    return seen


def _orbits(degree: int, gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for i, j in enumerate(g):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(degree):
        groups.setdefault(find(i), []).append(i)
    return sorted(tuple(v) for v in groups.values())


def generators_from_elements(elements: Iterable[Sequence[int]], degree: int) -> list[Permutation]:
    """Greedy generating set: scan sorted elements, keep those not yet generated."""
    gens: list[Permutation] = []
    span = {tuple(range(degree))}
    for e in sorted(tuple(x) for x in elements):
        if e in span:
            continue
        gens.append(Permutation(e))
        span = _enumerate(gens, degree, 10 * ELEMENT_CAP)
    return gens


def group_from_generators(gens: Sequence[Sequence[int]], degree: int | None = None) -> PermGroup:
    """Enumerate the group generated by ``gens`` (raises on the element cap)."""
    if degree is None:
        if not gens:
            raise DomainError("empty generator list needs an explicit degree")
        degree = len(gens[0])
    G = PermGroup(degree, gens)
    G.elements  # noqa: B018 - force enumeration so the cap is checked here
    return G


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, [])


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(Permutation([1, 0] + list(range(2, n))))
    if n >= 3:
        gens.append(Permutation(list(range(1, n)) + [0]))
    return PermGroup(n, gens, order=math.factorial(n))


def alternating_group(n: int) -> PermGroup:
    gens = []
    for k in range(2, n):
        images = list(range(n))
        images[0], images[1], images[k] = 1, k, 0
        gens.append(Permutation(images))
    return PermGroup(n, gens, order=max(1, math.factorial(n) // 2))


def cyclic_group(n: int) -> PermGroup:
    """C_n generated by the n-cycle (1 2 ... n)."""
    return regular_group([n]) if n > 1 else trivial_group(max(n, 1))


# ----------------------------------------------------------- regular groups


def mixed_radix_index(orders: Sequence[int], coords: Sequence[int]) -> int:
    idx = 0
    for k, c in zip(orders, coords):
        idx = idx * k + c
    return idx


def mixed_radix_coords(orders: Sequence[int], index: int) -> tuple[int, ...]:
    coords = []
    for k in reversed(orders):
        coords.append(index % k)
        index //= k
    return tuple(reversed(coords))


def regular_labels(orders: Sequence[int]) -> list[str]:
    """String labels of points, e.g. ``"0100"`` for Z_2^4 (first coordinate first)."""
    n = math.prod(orders)
    sep = "" if all(k <= 10 for k in orders) else ","
    return [sep.join(str(c) for c in mixed_radix_coords(orders, i)) for i in range(n)]


def label_to_point(orders: Sequence[int], label: str) -> int:
    parts = label.split(",") if "," in label else list(label)
    if len(parts) != len(orders):
        raise ParseError(f"label {label!r} does not have {len(orders)} coordinates")
    coords = [int(c) for c in parts]
    for c, k in zip(coords, orders):
        if not 0 <= c < k:
            raise ParseError(f"label {label!r}: coordinate {c} out of range for Z_{k}")
    return mixed_radix_index(orders, coords)


def translation(orders: Sequence[int], shift: Sequence[int]) -> Permutation:
    n = math.prod(orders)
    images = []
    for i in range(n):
        coords = mixed_radix_coords(orders, i)
        images.append(
            mixed_radix_index(orders, [(c + s) % k for c, s, k in zip(coords, shift, orders)])
        )
    return Permutation(images)


def regular_group(orders: Sequence[int]) -> PermGroup:
    """Regular action of Z_{k1} x ... x Z_{km} on itself by translation.

    Point ``i`` is the group element whose mixed-radix coordinates are
    ``mixed_radix_coords(orders, i)``, first coordinate most significant.
    """
    orders = list(orders)
    if any(k < 1 for k in orders):
        raise DomainError(f"cyclic orders must be positive: {orders}")
    n = math.prod(orders)
    if n > ELEMENT_CAP:
        raise CapacityError(f"regular group of order {n} exceeds the element cap", ELEMENT_CAP)
    gens = []
    for i, k in enumerate(orders):
        if k > 1:
            shift = [0] * len(orders)
            shift[i] = 1
            gens.append(translation(orders, shift))
    elements = [translation(orders, c) for c in product(*(range(k) for k in orders))]
    return PermGroup(n, gens, elements=elements)


def involution(A: PermGroup) -> Permutation:
    """The inverse map x -> x^-1 of a regular abelian group, based at point 0."""
    if not A.is_transitive() or not is_abelian(A):
        raise DomainError("involution needs a transitive abelian group")
    n = A.degree
    if n == 0:
        return Permutation()
    at_point: dict[int, Permutation] = {}
    for g in A.elements:
        at_point[g[0]] = g
    if len(at_point) != n or A.order() != n:
        raise DomainError("transitive abelian group is not regular")
    images = [0] * n
    for x, g in at_point.items():
        images[x] = g.index(0)  # g^-1(0)
    return Permutation(images)


def plus_group(A: PermGroup) -> PermGroup:
    """A+ = <A, alpha> for a regular abelian group A."""
    alpha = involution(A)
    return PermGroup(A.degree, list(A.generators) + [alpha])


# ----------------------------------------------------- restriction & friends


def _check_union_of_orbits(G: PermGroup, S: Iterable[int]) -> list[int]:
    pts = sorted(set(S))
    if any(not 0 <= x < G.degree for x in pts):
        raise DomainError(f"point set {pts} not inside 0..{G.degree - 1}")
    sset = set(pts)
    for orb in G.orbits:
        inside = sset.intersection(orb)
        if inside and len(inside) != len(orb):
            raise DomainError("point set is not a union of orbits")
    return pts


def restrict_perm(p: Sequence[int], points: Sequence[int]) -> tuple[int, ...]:
    """Restriction of ``p`` to an invariant sorted point list, re-indexed."""
    index = {x: i for i, x in enumerate(points)}
    return tuple([index[p[x]] for x in points])


def restriction(G: PermGroup, S: Iterable[int]) -> PermGroup:
    """Constituent of G on the union of orbits S, re-indexed to 0..|S|-1."""
    pts = _check_union_of_orbits(G, S)
    index = {x: i for i, x in enumerate(pts)}
    gens = [tuple([index[g[x]] for x in pts]) for g in G.generators]
    if G._elements is not None:
        elements = {tuple([index[g[x]] for x in pts]) for g in G._elements}
        return PermGroup(len(pts), gens, elements=elements)
    return PermGroup(len(pts), gens)


def pointwise_stabilizer(G: PermGroup, S: Iterable[int]) -> PermGroup:
    """Subgroup of G fixing every point of S, on the full degree."""
    pts = list(S)
    sub = [g for g in G.elements if all(g[x] == x for x in pts)]
    return PermGroup(G.degree, generators_from_elements(sub, G.degree), elements=sub)


def direct_sum(G: PermGroup, H: PermGroup) -> PermGroup:
    """G (+) H acting independently on n + m points."""
    n, m = G.degree, H.degree
    gens = [tuple(g) + tuple(range(n, n + m)) for g in G.generators]
    gens += [tuple(range(n)) + tuple(n + x for x in h) for h in H.generators]
    order = None
    if G._order is not None and H._order is not None:
        order = G._order * H._order
    return PermGroup(n + m, gens, order=order)


def parallel_sum(G: PermGroup, copies: int) -> PermGroup:
    """k copies of G acting identically (2~G for k = 2)."""
    if copies < 1:
        raise DomainError("parallel_sum needs at least one copy")
    n = G.degree
    gens = [
        tuple(c * n + x for c in range(copies) for x in g) for g in G.generators
    ]
    return PermGroup(n * copies, gens, order=G._order)


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if a * b != b * a:
                return False
    return True


def is_elementary_abelian_2(G: PermGroup) -> bool:
    """Abelian with every generator an involution (trivial group included)."""
    return is_abelian(G) and all((g * g).is_identity() for g in G.generators)


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    return H.degree == G.degree and all(h in G for h in H.generators)


def groups_equal(G: PermGroup, H: PermGroup) -> bool:
    """Equal element sets: same order and mutual generator membership."""
    if G.degree != H.degree:
        return False
    if G.order() != H.order():
        return False
    return all(g in H for g in G.generators) and all(h in G for h in H.generators)


# --------------------------------------------------------- subdirect sums


def _coset_key(x: tuple[int, ...], H: PermGroup) -> tuple[int, ...]:
    """Canonical name of the left coset xH: its least element."""
    return min(tuple([x[i] for i in h]) for h in H.elements)


@dataclass(frozen=True)
class FactorIso:
    """Isomorphism G1/H1 -> G2/H2 given by paired coset representatives.

    ``pairing[i] = j`` sends the coset of ``coset_reps_left[i]`` to the coset
    of ``coset_reps_right[j]``.
    """

    coset_reps_left: tuple[Permutation, ...]
    coset_reps_right: tuple[Permutation, ...]
    pairing: tuple[int, ...]

    def validate(self, G1: PermGroup, H1: PermGroup, G2: PermGroup, H2: PermGroup) -> None:
        for name, H, G in (("H1", H1, G1), ("H2", H2, G2)):
            if not is_subgroup(H, G):
                raise DomainError(f"{name} is not a subgroup")
            for g in G.generators:
                ginv = g.inverse()
                if any(g * h * ginv not in H for h in H.generators):
                    raise DomainError(f"{name} is not normal")
        if sorted(self.pairing) != list(range(len(self.pairing))):
            raise DomainError("pairing is not a bijection")
        left_index = self._coset_index(self.coset_reps_left, G1, H1, "left")
        right_index = self._coset_index(self.coset_reps_right, G2, H2, "right")
        if len(self.coset_reps_left) != len(self.coset_reps_right):
            raise DomainError("factor groups have different orders")
        L, R = self.coset_reps_left, self.coset_reps_right
        for i, a in enumerate(L):
            for j, b in enumerate(L):
                k = left_index[_coset_key(tuple(a * b), H1)]
                target = right_index[_coset_key(tuple(R[self.pairing[i]] * R[self.pairing[j]]), H2)]
                if self.pairing[k] != target:
                    raise DomainError("pairing is not a homomorphism of factor groups")

    @staticmethod
    def _coset_index(reps, G, H, side) -> dict[tuple[int, ...], int]:
        if G.order() % H.order():
            raise DomainError(f"{side} kernel order does not divide group order")
        if len(reps) != G.order() // H.order():
            raise DomainError(f"{side} transversal has {len(reps)} cosets, expected {G.order() // H.order()}")
        index = {}
        for i, r in enumerate(reps):
            if r not in G:
                raise DomainError(f"{side} representative {format_cycles(r)} not in group")
            key = _coset_key(tuple(r), H)
            if key in index:
                raise DomainError(f"{side} representatives repeat a coset")
            index[key] = i
        return index


def subdirect_sum(
    G1: PermGroup, H1: PermGroup, G2: PermGroup, H2: PermGroup, iso: FactorIso
) -> PermGroup:
    """G1[H1] (+)_phi G2[H2]: pairs (s, t) with phi(sH1) = tH2."""
    iso.validate(G1, H1, G2, H2)
    n = G1.degree
    elements = []
    for i, left in enumerate(iso.coset_reps_left):
        right = iso.coset_reps_right[iso.pairing[i]]
        for h1 in H1.elements:
            s = left * h1
            for h2 in H2.elements:
                t = right * h2
                elements.append(tuple(s) + tuple(n + x for x in t))
    if len(elements) > ELEMENT_CAP:
        raise CapacityError(f"subdirect sum exceeds the element cap of {ELEMENT_CAP}", ELEMENT_CAP)
    degree = n + G2.degree
    return PermGroup(degree, generators_from_elements(elements, degree), elements=elements)


@dataclass(frozen=True)
class SubdirectDecomposition:
    """G = left[left_kernel] (+)_phi right[right_kernel] w.r.t. a point split."""

    left: PermGroup
    left_kernel: PermGroup
    right: PermGroup
    right_kernel: PermGroup
    iso: FactorIso
    left_points: tuple[int, ...]
    right_points: tuple[int, ...]

    def reassemble(self) -> PermGroup:
        """Rebuild the group on the original point labels."""
        summed = subdirect_sum(self.left, self.left_kernel, self.right, self.right_kernel, self.iso)
        order = list(self.left_points) + list(self.right_points)
        degree = len(order)
        elements = []
        for e in summed.elements:
            images = [0] * degree
            for local, x in enumerate(order):
                images[x] = order[e[local]]
            elements.append(tuple(images))
        return PermGroup(degree, generators_from_elements(elements, degree), elements=elements)
