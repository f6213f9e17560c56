"""Independent brute-force oracles.

These deliberately avoid the stabiliser chain: orders and memberships come
from breadth-first closure over generator products, orbits from plain BFS
on points, and subgroups from exhaustive closure growth.  They exist to
cross-check the engine and the structure operators at desk scale and are
part of the shipped verification corpus.
"""

from __future__ import annotations

import numpy as np

from .caps import Caps, default_caps
from .errors import CapExceeded
from .groups import PermGroup
from .perms import Permutation, identity_images, inv, is_identity, mul


def naive_element_set(group: PermGroup, cap: int = 10**6) -> dict[bytes, np.ndarray]:
    """All elements by BFS closure over right multiplication."""
    ident = identity_images(group.degree)
    out = {ident.tobytes(): ident}
    queue = [ident]
    gen_arrays = [g.images for g in group.generators]
    while queue:
        e = queue.pop()
        for g in gen_arrays:
            t = mul(e, g)
            key = t.tobytes()
            if key not in out:
                if len(out) >= cap:
                    raise CapExceeded(f"naive closure exceeded {cap} elements")
                out[key] = t
                queue.append(t)
    return out


def naive_order(group: PermGroup, cap: int = 10**6) -> int:
    return len(naive_element_set(group, cap))


def naive_orbit(group: PermGroup, x: int) -> list[int]:
    out = [x]
    seen = {x}
    qi = 0
    gen_arrays = [g.images for g in group.generators]
    while qi < len(out):
        p = out[qi]
        qi += 1
        for g in gen_arrays:
            q = int(g[p])
            if q not in seen:
                seen.add(q)
                out.append(q)
    return out


def multiplication_table(degree: int) -> dict:
    """Exhaustive composition table for all permutations of small degree."""
    import itertools

    perms = [np.array(p, dtype=identity_images(degree).dtype)
             for p in itertools.permutations(range(degree))]
    table = {}
    for a in perms:
        for b in perms:
            table[(a.tobytes(), b.tobytes())] = mul(a, b).tobytes()
    return table


def all_subgroups(group: PermGroup, cap_order: int = 200) -> list[PermGroup]:
    """Every subgroup, by closure growth from cyclic seeds; |G| <= cap only."""
    order = group.order()
    if order > cap_order:
        raise CapExceeded(f"all-subgroups oracle capped at order {cap_order}")
    elements = [arr.copy() for arr in group.element_arrays()]
    ident_key = identity_images(group.degree).tobytes()

    def closure(seed_keys: frozenset[bytes], lookup: dict[bytes, np.ndarray]) -> frozenset[bytes]:
        current = {ident_key}
        queue = [lookup[k] for k in seed_keys]
        current |= set(seed_keys)
        while queue:
            e = queue.pop()
            for k in list(current):
                for prod in (mul(e, lookup[k]), mul(lookup[k], e)):
                    pk = prod.tobytes()
                    if pk not in current:
                        current.add(pk)
                        lookup[pk] = prod
                        queue.append(prod)
            einv = inv(e)
            ek = einv.tobytes()
            if ek not in current:
                current.add(ek)
                lookup[ek] = einv
                queue.append(einv)
        return frozenset(current)

    lookup = {e.tobytes(): e for e in elements}
    found: set[frozenset[bytes]] = {frozenset({ident_key})}
    frontier = [frozenset({ident_key})]
    while frontier:
        nxt = []
        for sub in frontier:
            for e in elements:
                key = e.tobytes()
                if key in sub:
                    continue
                grown = closure(sub | {key}, lookup)
                if grown not in found:
                    found.add(grown)
                    nxt.append(grown)
        frontier = nxt
    out = []
    for keys in sorted(found, key=lambda s: (len(s), sorted(s))):
        target = len(keys)
        gens: list[Permutation] = []
        current = PermGroup.trivial(group.degree)
        for k in sorted(keys):
            if k == ident_key or current.contains_array(lookup[k]):
                continue
            gens.append(Permutation(lookup[k].copy(), _trusted=True))
            current = PermGroup(group.degree, gens, assume_order=order)
            if current.order() == target:
                break
        out.append(current)
    return out


def naive_normal_subgroups(group: PermGroup, cap_order: int = 200) -> list[PermGroup]:
    """Filter the full subgroup list down to the normal ones."""
    subs = all_subgroups(group, cap_order)
    return [s for s in subs if s.is_normal_in(group)]


def naive_is_elementary_abelian(group: PermGroup, p: int) -> bool:
    if group.order() == 1:
        return True
    for a in group.generators:
        if not (a**p).is_identity():
            return False
        for b in group.generators:
            if not a.commutator(b).is_identity():
                return False
    return True


def naive_max_elementary_abelians(group: PermGroup, p: int, cap_order: int = 200) -> list[PermGroup]:
    """All elementary abelian subgroups of maximal order, from the full list."""
    subs = all_subgroups(group, cap_order)
    elems = [s for s in subs if naive_is_elementary_abelian(s, p)]
    best = max(s.order() for s in elems)
    return [s for s in elems if s.order() == best]
