"""Permutation isomorphism of abelian permutation groups.

Used to move catalogue graphs onto an arbitrary labelling of the same group:
if f G f^-1 = H and Aut(g) = G then Aut(g transported by f) = H.
"""

from __future__ import annotations

import itertools

from .errors import DomainError
from .perm import PermGroup, Permutation, is_abelian


def _hom_from_images(G: PermGroup, gens: list[Permutation], images: list[Permutation]) -> dict | None:
    """Extend gens -> images to a homomorphism on G, or None if inconsistent."""
    ident = Permutation.identity(G.degree)
    target_ident = Permutation.identity(len(images[0])) if images else Permutation()
    psi = {ident: target_ident}
    queue = [ident]
    while queue:
        x = queue.pop()
        for g, h in zip(gens, images):
            y = g * x
            z = h * psi[x]
            seen = psi.get(y)
            if seen is None:
                psi[y] = z
                queue.append(y)
            elif seen != z:
                return None
    return psi


def abstract_isomorphisms(G: PermGroup, H: PermGroup):
    """Yield isomorphisms G -> H (as element dicts) for abelian G and H."""
    if not (is_abelian(G) and is_abelian(H)) or G.order() != H.order():
        return
    gens = list(G.generators)
    if not gens:
        yield {Permutation.identity(G.degree): Permutation.identity(H.degree)}
        return
    by_order: dict[int, list[Permutation]] = {}
    for h in H.sorted_elements():
        by_order.setdefault(h.order(), []).append(h)
    choices = [by_order.get(g.order(), []) for g in gens]
    for images in itertools.product(*choices):
        psi = _hom_from_images(G, gens, list(images))
        if psi is not None and len(set(psi.values())) == H.order():
            yield psi


def permutation_isomorphism(G: PermGroup, H: PermGroup) -> Permutation | None:
    """A bijection f of points with f G f^-1 = H, or None.

    For each isomorphism psi we match orbits of G to orbits of H whose point
    stabilizers correspond, then put f(g x) = psi(g) y for base points x, y.
    """
    if G.degree != H.degree:
        return None
    if sorted(map(len, G.orbits)) != sorted(map(len, H.orbits)):
        return None
    g_orbits, h_orbits = G.orbits, H.orbits

    def stabilizer(K: PermGroup, x: int) -> frozenset:
        return frozenset(k for k in K.elements if k[x] == x)

    h_stabs = [stabilizer(H, orb[0]) for orb in h_orbits]
    g_stabs = [stabilizer(G, orb[0]) for orb in g_orbits]
    for psi in abstract_isomorphisms(G, H):
        used: set[int] = set()
        match = []
        for orb, stab in zip(g_orbits, g_stabs):
            image = frozenset(psi[s] for s in stab)
            j = next(
                (j for j, o in enumerate(h_orbits) if j not in used and len(o) == len(orb) and h_stabs[j] == image),
                None,
            )
            if j is None:
                break
            used.add(j)
            match.append(j)
        else:
            f = [0] * G.degree
            for orb, j in zip(g_orbits, match):
                x, y = orb[0], h_orbits[j][0]
                for g in G.elements:
                    f[g[x]] = psi[g][y]
            return Permutation(f)
    return None


def conjugate(G: PermGroup, f: Permutation) -> PermGroup:
    """f G f^-1."""
    if len(f) != G.degree:
        raise DomainError("conjugating permutation has the wrong degree")
    finv = f.inverse()
    return PermGroup(G.degree, [f * g * finv for g in G.generators])
