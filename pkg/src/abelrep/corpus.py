"""A deterministic corpus of small abelian permutation groups for property checks."""

from __future__ import annotations

import random
from typing import Sequence

from .perm import (
    PermGroup,
    Permutation,
    direct_sum,
    generators_from_elements,
    parallel_sum,
    regular_group,
    trivial_group,
)

#: Orbit shapes the corpus draws from: cyclic orders plus Z2^2 and fixed points.
BLOCKS: tuple[tuple[int, ...], ...] = ((2,), (3,), (4,), (5,), (6,), (2, 2), (1,))


def _block_group(orders: Sequence[int]) -> PermGroup:
    if tuple(orders) == (1,):
        return trivial_group(1)
    return regular_group(orders)


def product_of_blocks(blocks: Sequence[Sequence[int]]) -> PermGroup:
    """Direct sum of regular groups, one orbit per block."""
    G = _block_group(blocks[0])
    for b in blocks[1:]:
        G = direct_sum(G, _block_group(b))
    return G


def _random_element(rng: random.Random, D: PermGroup) -> Permutation:
    # D is a direct sum of regular groups: pick each coordinate independently
    return rng.choice(D.sorted_elements())


def named_groups() -> list[tuple[str, PermGroup]]:
    """Hand-picked groups covering the interesting structural cases."""
    out: list[tuple[str, PermGroup]] = []
    for k in range(2, 7):
        out.append((f"C{k}", regular_group([k])))
        out.append((f"2~C{k}", parallel_sum(regular_group([k]), 2)))
    for k in range(2, 5):
        out.append((f"3~C{k}", parallel_sum(regular_group([k]), 3)))
    for a in range(2, 7):
        for b in range(a, 7):
            if a + b <= 12:
                out.append((f"C{a}+C{b}", product_of_blocks([(a,), (b,)])))
    out.append(("Z2^2", regular_group([2, 2])))
    out.append(("Z2^3", regular_group([2, 2, 2])))
    out.append(("Z3^2", regular_group([3, 3])))
    out.append(("Z2xZ4", regular_group([4, 2])))
    out.append(("Z2xZ6", regular_group([6, 2])))
    for n in range(1, 6):
        out.append((f"I{n}", trivial_group(n)))
    out.append(("C2+2~C3", direct_sum(regular_group([2]), parallel_sum(regular_group([3]), 2))))
    out.append(("C3+2~C3", direct_sum(regular_group([3]), parallel_sum(regular_group([3]), 2))))
    out.append(("C2+C2+C2", product_of_blocks([(2,), (2,), (2,)])))
    out.append(("I1+C4", product_of_blocks([(1,), (4,)])))
    out.append(("2~C3+2~C3", direct_sum(parallel_sum(regular_group([3]), 2), parallel_sum(regular_group([3]), 2))))
    out.append(("2~C2+2~C4", direct_sum(parallel_sum(regular_group([2]), 2), parallel_sum(regular_group([4]), 2))))
    out.append(("C3+C3+C3", product_of_blocks([(3,), (3,), (3,)])))
    # intersections of pairwise parallel actions are not 2-orbit-closed
    for k, parts in ((2, 3), (3, 3), (2, 4), (4, 3), (2, 5), (2, 6)):
        gens = []
        for i in range(parts - 1):
            images = list(range(k * parts))
            for block in (i, i + 1):
                for x in range(k):
                    images[block * k + x] = block * k + (x + 1) % k
            gens.append(images)
        out.append((f"chain{parts}xC{k}", PermGroup(k * parts, gens)))
    return out


def _coordinate(blocks: Sequence[Sequence[int]], g: Permutation, index: int, start: int) -> tuple[int, ...]:
    orders = blocks[index]
    shift = g[start] - start
    coords = []
    for k in reversed(orders):
        coords.append(shift % k)
        shift //= k
    return tuple(reversed(coords))


def character_kernels(count: int, seed: int = 7, max_degree: int = 12) -> list[tuple[str, PermGroup]]:
    """Kernels of random characters D -> Z_p of direct sums D of regular groups."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.choice((2, 3))
        blocks: list[tuple[int, ...]] = []
        degree = 0
        while True:
            b = rng.choice([b for b in BLOCKS if b[0] % p == 0])
            size = 1
            for k in b:
                size *= k
            if degree + size > max_degree:
                break
            blocks.append(b)
            degree += size
        if len(blocks) < 3:
            continue
        D = product_of_blocks(blocks)
        coeffs = [rng.randrange(p) for _ in blocks]
        starts = [min(orb) for orb in D.orbits]
        kernel = [
            g
            for g in D.sorted_elements()
            if sum(c * _coordinate(blocks, g, i, s)[0] for i, (c, s) in enumerate(zip(coeffs, starts))) % p == 0
        ]
        G = PermGroup(D.degree, generators_from_elements(kernel, D.degree), elements=kernel)
        label = "+".join("x".join(map(str, b)) for b in blocks)
        out.append((f"ker{p}({label})#{len(out)}", G))
    return out


def random_groups(count: int, seed: int = 20240521, max_degree: int = 12) -> list[tuple[str, PermGroup]]:
    """Random subgroups of direct sums of small regular groups."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        blocks: list[tuple[int, ...]] = []
        degree = 0
        target = rng.randint(3, max_degree)
        while True:
            b = rng.choice(BLOCKS)
            size = 1
            for k in b:
                size *= k
            if degree + size > target:
                break
            blocks.append(b)
            degree += size
        if len(blocks) < 2:
            continue
        D = product_of_blocks(blocks)
        gens = [_random_element(rng, D) for _ in range(rng.randint(1, 3))]
        G = PermGroup(D.degree, gens)
        label = "+".join("x".join(map(str, b)) for b in blocks)
        out.append((f"sub({label})#{len(out)}", G))
    return out


def corpus(min_size: int = 220, seed: int = 20240521) -> list[tuple[str, PermGroup]]:
    """Named groups plus random ones, deduplicated by element set, degree <= 12."""
    seen: set[tuple[int, frozenset]] = set()
    out: list[tuple[str, PermGroup]] = []

    def add(name: str, G: PermGroup) -> None:
        key = (G.degree, G.elements)
        if G.degree <= 12 and key not in seen:
            seen.add(key)
            out.append((name, G))

    for name, G in named_groups():
        add(name, G)
    for name, G in character_kernels(40, seed):
        add(name, G)
    batch = 0
    while len(out) < min_size:
        for name, G in random_groups(50, seed + batch):
            add(name, G)
        batch += 1
    return out
