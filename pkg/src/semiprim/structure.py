"""Subgroup-theoretic operators: normal closures and lattices, centralisers,
Sylow subgroups, the O_p / O_{p'} radicals, Fitting and Frattini subgroups,
omega-centers, Thompson subgroups, solubility/nilpotency and p-separability.

Everything is a pure function of immutable groups.  The normal-subgroup
lattice is computed as the join closure of the normal closures of
conjugacy-class representatives; every normal subgroup is the join of the
class closures it contains, so the result is complete.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .caps import Caps, default_caps
from .errors import CapExceeded, InconsistencyError, ParameterError
from .groups import CosetAction, PermGroup, quotient_action
from .numutil import is_prime, p_part, prime_factors
from .perms import Permutation, identity_images, inv, is_identity, mul

# ---------------------------------------------------------------------------
# closures


def _closure_under_conjugation(
    degree: int,
    seed_arrays: list[np.ndarray],
    conj_arrays: list[np.ndarray],
    bound: int | None,
) -> PermGroup:
    gens = [a for a in seed_arrays if not is_identity(a)]
    work = list(gens)
    current = PermGroup(
        degree, [Permutation(a, _trusted=True) for a in gens], assume_order=bound
    )
    while work:
        fresh: list[np.ndarray] = []
        added = False
        for s in work:
            for c in conj_arrays:
                t = mul(mul(inv(c), s), c)
                if not current.contains_array(t):
                    fresh.append(t)
                    gens.append(t)
                    added = True
                    current = PermGroup(
                        degree,
                        [Permutation(a, _trusted=True) for a in gens],
                        assume_order=bound,
                    )
        work = fresh if added else []
    if len(gens) > 8:
        from .groups import reduce_generators

        return reduce_generators(current)
    return current


def normal_closure(
    group: PermGroup,
    seeds: Iterable[Permutation],
    *,
    assume_order: int | None = None,
) -> PermGroup:
    """Smallest normal subgroup of ``group`` containing ``seeds``.

    Fixpoint of conjugate-and-regenerate.  ``assume_order`` may carry a
    proven upper bound for the closure (for example the order of a known
    normal subgroup containing the seeds); by default the group order is
    used, which is always sound.
    """
    return _closure_under_conjugation(
        group.degree,
        [s.images for s in seeds],
        [g.images for g in group.generators],
        assume_order or group.order(),
    )


def commutator_subgroup(a: PermGroup, b: PermGroup) -> PermGroup:
    """[A, B] for subgroups of a common symmetric group.

    Generated by generator commutators, closed under conjugation by both
    generating sets (which is enough: [A,B] is normal in <A,B>).
    """
    if a.degree != b.degree:
        raise ParameterError("commutator of groups of different degree")
    seeds = []
    for x in a.generators:
        for y in b.generators:
            c = x.commutator(y)
            if not c.is_identity():
                seeds.append(c.images)
    conjugators = [g.images for g in a.generators] + [g.images for g in b.generators]
    return _closure_under_conjugation(a.degree, seeds, conjugators, None)


def derived_subgroup(group: PermGroup) -> PermGroup:
    return commutator_subgroup(group, group)


def derived_series(group: PermGroup) -> list[PermGroup]:
    series = [group]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.is_trivial():
            break
    return series


def is_soluble(group: PermGroup) -> bool:
    return derived_series(group)[-1].is_trivial()


def lower_central_series(group: PermGroup) -> list[PermGroup]:
    series = [group]
    while True:
        nxt = commutator_subgroup(group, series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.is_trivial():
            break
    return series


def is_nilpotent(group: PermGroup) -> bool:
    return lower_central_series(group)[-1].is_trivial()


def is_perfect(group: PermGroup) -> bool:
    return derived_subgroup(group).order() == group.order()


# ---------------------------------------------------------------------------
# conjugacy classes (vectorised: elements become integer indices)


def _element_rows(group: PermGroup, probe: np.ndarray) -> tuple[np.ndarray, "_Materializer"]:
    """Images of every element on the probe points, one row per element.

    Row order is deterministic; the returned materialiser rebuilds the
    full image array of the element behind any row index.
    """
    chain = group.chain
    order = group.order()
    levels = chain.levels
    if not levels:
        rows = chain.identity[probe][None, :].copy()
        return rows, _Materializer([chain.identity], np.empty((1, group.degree), dtype=chain.identity.dtype), 1, chain)
    orb0 = levels[0].orbit
    k0 = len(orb0)
    rest = order // k0
    if rest <= 65536:
        u_mat = np.stack([levels[0].transversal[p] for p in orb0])
        hs = list(_suffix_elements(chain, 1))
        rows = np.empty((order, len(probe)), dtype=u_mat.dtype)
        for hi, h in enumerate(hs):
            rows[hi * k0 : (hi + 1) * k0] = u_mat[:, h[probe]]
        return rows, _Materializer(hs, u_mat, k0, chain)
    rows = np.empty((order, len(probe)), dtype=chain.identity.dtype)
    for i, arr in enumerate(chain.element_arrays()):
        rows[i] = arr[probe]
    return rows, _Materializer(None, None, None, chain)


class _Materializer:
    """Rebuilds full elements behind row indices of :func:`_element_rows`."""

    def __init__(self, hs, u_mat, k0, chain):
        self._hs = hs
        self._u = u_mat
        self._k0 = k0
        self._chain = chain

    def __call__(self, idx: int) -> np.ndarray:
        if self._hs is not None:
            h = self._hs[idx // self._k0]
            return mul(h, self._u[idx % self._k0])
        for i, arr in enumerate(self._chain.element_arrays()):
            if i == idx:
                return arr.copy()
        raise InconsistencyError("row index out of range")

    def many(self, indices: list[int]) -> list[np.ndarray]:
        if self._hs is not None:
            return [self(i) for i in indices]
        wanted = dict.fromkeys(indices)
        remaining = len(wanted)
        for i, arr in enumerate(self._chain.element_arrays()):
            if i in wanted and wanted[i] is None:
                wanted[i] = arr.copy()
                remaining -= 1
                if not remaining:
                    break
        return [wanted[i] for i in indices]


def _suffix_elements(chain, start_level):
    nlev = len(chain.levels)

    def rec(i):
        if i == nlev:
            yield chain.identity
            return
        lvl = chain.levels[i]
        for p in lvl.orbit:
            if p == lvl.point:
                yield from rec(i + 1)
            else:
                u = lvl.transversal[p]
                for h in rec(i + 1):
                    yield mul(h, u)

    yield from rec(start_level)


def conjugacy_class_data(
    group: PermGroup, caps: Caps | None = None
) -> tuple[list[np.ndarray], np.ndarray]:
    """Class representatives and per-element class ids.

    Returns ``(reps, class_of)`` where ``reps[c]`` is the full image array
    of the first (in element-row order) member of class ``c``.
    """
    caps = caps or default_caps()
    order = group.order()
    caps.check_enumerate(order)
    chain = group.chain
    base = np.asarray(chain.base, dtype=np.int64)
    blen = max(len(base), 1)
    if len(base) == 0:
        return [chain.identity.copy()], np.zeros(1, dtype=np.int64)

    gen_arrays = [g.images for g in group.generators]
    gen_invs = [inv(g) for g in gen_arrays]
    probe_sets = [base] + [gi[base].astype(np.int64) for gi in gen_invs]
    probe = np.unique(np.concatenate(probe_sets))
    pos = {int(p): i for i, p in enumerate(probe)}
    cols = [np.array([pos[int(p)] for p in ps], dtype=np.int64) for ps in probe_sets]

    rows, materialize = _element_rows(group, probe)

    if group.degree ** blen < 2**62:
        mults = group.degree ** np.arange(blen - 1, -1, -1, dtype=np.int64)

        def encode(mat: np.ndarray) -> np.ndarray:
            return mat.astype(np.int64) @ mults

        keys = encode(rows[:, cols[0]])
        sort_idx = np.argsort(keys, kind="stable")
        sorted_keys = keys[sort_idx]

        def lookup(target_keys: np.ndarray) -> np.ndarray:
            where = np.searchsorted(sorted_keys, target_keys)
            if not bool((sorted_keys[where] == target_keys).all()):
                raise InconsistencyError("conjugate fell outside the element table")
            return sort_idx[where]

        maps = []
        for g, c in zip(gen_arrays, cols[1:]):
            conj_keys = encode(g.astype(np.int64)[rows[:, c]])
            maps.append(lookup(conj_keys))
    else:
        index = {rows[i, cols[0]].tobytes(): i for i in range(order)}
        maps = []
        for g, c in zip(gen_arrays, cols[1:]):
            conj_rows = g.astype(np.int64)[rows[:, c]].astype(rows.dtype)
            maps.append(
                np.array([index[conj_rows[i].tobytes()] for i in range(order)], dtype=np.int64)
            )

    class_of = np.full(order, -1, dtype=np.int64)
    rep_indices: list[int] = []
    for i in range(order):
        if class_of[i] >= 0:
            continue
        cid = len(rep_indices)
        rep_indices.append(i)
        if len(rep_indices) > caps.max_classes:
            raise CapExceeded(
                f"more than {caps.max_classes} conjugacy classes; raise Caps.max_classes"
            )
        class_of[i] = cid
        frontier = np.array([i], dtype=np.int64)
        while len(frontier):
            pieces = []
            for m in maps:
                img = m[frontier]
                fresh = img[class_of[img] < 0]
                if len(fresh):
                    class_of[fresh] = cid
                    pieces.append(fresh)
            frontier = np.unique(np.concatenate(pieces)) if pieces else np.empty(0, dtype=np.int64)
    if int((class_of < 0).sum()):
        raise InconsistencyError("class scan missed elements")
    reps = materialize.many(rep_indices)
    return reps, class_of


def conjugacy_class_reps(group: PermGroup, caps: Caps | None = None) -> list[Permutation]:
    reps, _ = conjugacy_class_data(group, caps)
    return [Permutation(r, _trusted=True) for r in reps]


# ---------------------------------------------------------------------------
# the normal-subgroup lattice


@dataclass
class NormalLattice:
    """All normal subgroups of ``parent``, sorted by order (then discovery)."""

    parent: PermGroup
    members: list[PermGroup] = field(default_factory=list)

    def nontrivial_proper(self) -> list[PermGroup]:
        n = self.parent.order()
        return [m for m in self.members if 1 < m.order() < n]

    def proper(self) -> list[PermGroup]:
        n = self.parent.order()
        return [m for m in self.members if m.order() < n]

    def minimal_normals(self) -> list[PermGroup]:
        out = []
        for m in self.nontrivial_proper():
            if not any(
                other.order() < m.order() and other.is_subgroup_of(m)
                for other in self.nontrivial_proper()
            ):
                out.append(m)
        return out

    def to_json(self) -> list[dict]:
        return [
            {
                "order": m.order(),
                "generators": [[int(v) for v in g.images] for g in m.generators],
            }
            for m in self.members
        ]


def _find_minimal_containing(members: list[PermGroup], arrays: list[np.ndarray]) -> PermGroup | None:
    for m in members:  # kept sorted ascending by order
        if all(m.contains_array(a) for a in arrays):
            return m
    return None


def _dedup_insert(members: list[PermGroup], candidate: PermGroup) -> tuple[list[PermGroup], bool]:
    for m in members:
        if m.order() == candidate.order() and candidate.is_subgroup_of(m):
            return members, False
    members.append(candidate)
    members.sort(key=PermGroup.order)
    return members, True


def all_normal_subgroups(group: PermGroup, caps: Caps | None = None) -> NormalLattice:
    """Exactly the normal subgroups of ``group``.

    Computed as all joins of normal closures of conjugacy-class
    representatives; complete because every normal subgroup is the join
    of the class closures it contains.
    """
    caps = caps or default_caps()
    reps, _ = conjugacy_class_data(group, caps)
    members: list[PermGroup] = [PermGroup.trivial(group.degree)]
    for rep in reps:
        if is_identity(rep):
            continue
        container = _find_minimal_containing(members, [rep])
        bound = container.order() if container is not None else group.order()
        closure = normal_closure(
            group, [Permutation(rep, _trusted=True)], assume_order=bound
        )
        members, _ = _dedup_insert(members, closure)
        if len(members) > caps.max_lattice:
            raise CapExceeded("normal lattice exceeded Caps.max_lattice")

    changed = True
    while changed:
        changed = False
        snapshot = list(members)
        for i in range(len(snapshot)):
            for j in range(i + 1, len(snapshot)):
                a, b = snapshot[i], snapshot[j]
                if a.is_subgroup_of(b) or b.is_subgroup_of(a):
                    continue
                arrays = [g.images for g in a.generators] + [g.images for g in b.generators]
                container = _find_minimal_containing(members, arrays)
                bound = container.order() if container is not None else group.order()
                joined = a.join(b, assume_order=bound)
                members, added = _dedup_insert(members, joined)
                if added:
                    changed = True
                    if len(members) > caps.max_lattice:
                        raise CapExceeded("normal lattice exceeded Caps.max_lattice")

    for m in members:
        if not m.is_normal_in(group):
            raise InconsistencyError("lattice member failed the normality check")
    return NormalLattice(parent=group, members=members)


# ---------------------------------------------------------------------------
# centralisers

def centralizer(group: PermGroup, targets: Iterable[Permutation], caps: Caps | None = None) -> PermGroup:
    """Elements commuting with every target, by streamed filter."""
    caps = caps or default_caps()
    caps.check_enumerate(group.order())
    t_arrays = [t.images for t in targets]
    picked: list[Permutation] = []
    current = PermGroup.trivial(group.degree)
    for arr in group.element_arrays():
        ok = True
        for t in t_arrays:
            if not bool((mul(arr, t) == mul(t, arr)).all()):
                ok = False
                break
        if ok and not current.contains_array(arr):
            picked.append(Permutation(arr.copy(), _trusted=True))
            current = PermGroup(group.degree, picked, assume_order=group.order())
    return current


def center(group: PermGroup, caps: Caps | None = None) -> PermGroup:
    return centralizer(group, group.generators, caps)


def normalizer_in(group: PermGroup, target: PermGroup, caps: Caps | None = None) -> PermGroup:
    """N_group(target) by streamed filter (desk scale only)."""
    caps = caps or default_caps()
    caps.check_enumerate(group.order())
    t_gens = [t.images for t in target.generators]
    picked: list[Permutation] = []
    current = PermGroup.trivial(group.degree)
    for arr in group.element_arrays():
        a_inv = inv(arr)
        if all(target.contains_array(mul(mul(a_inv, t), arr)) for t in t_gens):
            if not current.contains_array(arr):
                picked.append(Permutation(arr.copy(), _trusted=True))
                current = PermGroup(group.degree, picked, assume_order=group.order())
    return current


# ---------------------------------------------------------------------------
# Sylow machinery and radicals


def _element_order_is_p_power(arr: np.ndarray, p: int) -> bool:
    seen = np.zeros(len(arr), dtype=bool)
    for i in range(len(arr)):
        if seen[i]:
            continue
        length = 1
        j = int(arr[i])
        seen[i] = True
        while j != i:
            seen[j] = True
            j = int(arr[j])
            length += 1
        n = length
        while n % p == 0:
            n //= p
        if n != 1:
            return False
    return True


def sylow(group: PermGroup, p: int, caps: Caps | None = None) -> PermGroup:
    """A Sylow p-subgroup, deterministically.

    Start from the first p-element in stream order; repeatedly extend by
    the first p-element that normalises the current subgroup and joins it
    into a strictly larger p-group.
    """
    caps = caps or default_caps()
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    caps.check_enumerate(group.order())
    target = p_part(group.order(), p)
    current = PermGroup.trivial(group.degree)
    while current.order() < target:
        extended = False
        for arr in group.element_arrays():
            if is_identity(arr) or current.contains_array(arr):
                continue
            if not _element_order_is_p_power(arr, p):
                continue
            a_inv = inv(arr)
            if not all(
                current.contains_array(mul(mul(a_inv, s.images), arr))
                for s in current.generators
            ):
                continue
            candidate = PermGroup(
                group.degree,
                list(current.generators) + [Permutation(arr.copy(), _trusted=True)],
                assume_order=group.order(),
            )
            if candidate.order() == p_part(candidate.order(), p):
                current = candidate
                extended = True
                break
        if not extended:
            raise InconsistencyError("Sylow growth stalled below the full p-part")
    return current


def core_p(group: PermGroup, p: int, caps: Caps | None = None) -> PermGroup:
    """O_p: the intersection of all conjugates of one Sylow p-subgroup."""
    caps = caps or default_caps()
    s = sylow(group, p, caps)
    if s.is_trivial():
        return s
    result = s
    known = [s]
    queue = [s]
    while queue and not result.is_trivial():
        t = queue.pop(0)
        for g in group.generators:
            c = t.conjugated_by(g)
            if any(c.is_subgroup_of(k) for k in known):
                continue
            known.append(c)
            queue.append(c)
            result = result.intersection_with(c, caps)
            if result.is_trivial():
                break
    return result


def core_p_prime(group: PermGroup, p: int, caps: Caps | None = None) -> PermGroup:
    """O_{p'}: the largest normal subgroup of order coprime to p.

    Read off the normal lattice: the product of two normal p'-subgroups
    is again one, so the maximum is unique.
    """
    caps = caps or default_caps()
    lattice = all_normal_subgroups(group, caps)
    best = PermGroup.trivial(group.degree)
    for m in lattice.members:
        if m.order() % p and m.order() > best.order():
            best = m
    for m in lattice.members:
        if m.order() % p and not m.is_subgroup_of(best):
            raise InconsistencyError("two incomparable maximal normal p'-subgroups")
    return best


def fitting(group: PermGroup, caps: Caps | None = None) -> PermGroup:
    """F(G): product of the O_p over primes dividing |G|; checked nilpotent."""
    caps = caps or default_caps()
    out = PermGroup.trivial(group.degree)
    for p in prime_factors(group.order()):
        op = core_p(group, p, caps)
        if not op.is_trivial():
            out = out.join(op, assume_order=group.order())
    if not is_nilpotent(out):
        raise InconsistencyError("Fitting subgroup came out non-nilpotent")
    return out


def _require_p_group(group: PermGroup) -> int:
    fac = prime_factors(group.order())
    if len(fac) != 1:
        raise ParameterError("expected a nontrivial p-group")
    return next(iter(fac))


def frattini_p(pgroup: PermGroup, caps: Caps | None = None) -> PermGroup:
    """Frattini subgroup of a p-group: P' . <generator p-th powers>."""
    p = _require_p_group(pgroup)
    gens = list(derived_subgroup(pgroup).generators)
    for g in pgroup.generators:
        gp = g**p
        if not gp.is_identity():
            gens.append(gp)
    return PermGroup(pgroup.degree, gens, assume_order=pgroup.order())


def omega_center(pgroup: PermGroup, caps: Caps | None = None) -> PermGroup:
    """Subgroup of the center generated by its elements of order p."""
    caps = caps or default_caps()
    p = _require_p_group(pgroup)
    z = center(pgroup, caps)
    gens = []
    ident = identity_images(pgroup.degree)
    for arr in z.element_arrays():
        if is_identity(arr):
            continue
        power = arr
        for _ in range(p - 1):
            power = mul(power, arr)
        if bool((power == ident).all()):
            gens.append(Permutation(arr.copy(), _trusted=True))
    out = PermGroup(pgroup.degree, gens, assume_order=z.order())
    for g in out.generators:
        for h in out.generators:
            if g.commutator(h) != Permutation.identity(pgroup.degree):
                raise InconsistencyError("omega-center is not abelian")
    return out


# ---------------------------------------------------------------------------
# Thompson subgroups


def max_elementary_abelians(pgroup: PermGroup, caps: Caps | None = None) -> list[PermGroup]:
    """The set A(S): elementary abelian subgroups of maximal order.

    Exhaustive growth over commuting order-p elements, memoised on the
    element set of the subgroup; ties are all kept.
    """
    caps = caps or default_caps()
    p = _require_p_group(pgroup)
    if pgroup.order() > caps.max_thompson:
        raise CapExceeded(f"|S| = {pgroup.order()} exceeds Caps.max_thompson")

    ident = identity_images(pgroup.degree)
    order_p: list[np.ndarray] = []
    for arr in pgroup.element_arrays():
        if is_identity(arr):
            continue
        power = arr
        for _ in range(p - 1):
            power = mul(power, arr)
        if bool((power == ident).all()):
            order_p.append(arr.copy())

    # elementary abelian shortcut: S itself is the unique member
    if len(order_p) == pgroup.order() - 1 and all(
        a.commutator(b).is_identity() for a in pgroup.generators for b in pgroup.generators
    ):
        return [pgroup]

    visited: set[frozenset[bytes]] = set()
    dead_ends: list[tuple[int, list[np.ndarray]]] = []
    budget = [200_000]

    def grow(member_arrays: list[np.ndarray], member_keys: frozenset[bytes]) -> None:
        budget[0] -= 1
        if budget[0] < 0:
            raise CapExceeded("elementary abelian enumeration exploded; raise caps")
        candidates = []
        for x in order_p:
            if x.tobytes() in member_keys:
                continue
            if all(bool((mul(x, m) == mul(m, x)).all()) for m in member_arrays):
                candidates.append(x)
        if not candidates:
            dead_ends.append((len(member_arrays), member_arrays))
            return
        for x in candidates:
            new_members = list(member_arrays)
            for m in member_arrays:
                acc = m
                for _ in range(p - 1):
                    acc = mul(acc, x)
                    new_members.append(acc)
            key = frozenset(m.tobytes() for m in new_members)
            if key in visited:
                continue
            visited.add(key)
            grow(new_members, key)

    start = [ident]
    grow(start, frozenset([ident.tobytes()]))
    best = max(size for size, _ in dead_ends)
    seen_sets = set()
    out = []
    for size, arrays in dead_ends:
        if size != best:
            continue
        key = frozenset(a.tobytes() for a in arrays)
        if key in seen_sets:
            continue
        seen_sets.add(key)
        out.append(
            PermGroup(
                pgroup.degree,
                [Permutation(a, _trusted=True) for a in arrays if not is_identity(a)],
                assume_order=pgroup.order(),
            )
        )
    return out


def thompson(pgroup: PermGroup, caps: Caps | None = None) -> PermGroup:
    """J(S): generated by all elementary abelian subgroups of maximal order."""
    members = max_elementary_abelians(pgroup, caps)
    gens: list[Permutation] = []
    for m in members:
        gens.extend(m.generators)
    return PermGroup(pgroup.degree, gens, assume_order=pgroup.order())


def thompson_of_group(group: PermGroup, p: int, caps: Caps | None = None) -> PermGroup:
    """J(F) = <J(S) : S Sylow p-subgroup of F> = the F-closure of one J(S)."""
    caps = caps or default_caps()
    s = sylow(group, p, caps)
    if s.is_trivial():
        return s
    j = thompson(s, caps)
    return normal_closure(group, j.generators)


# ---------------------------------------------------------------------------
# p-separability


def p_separability(
    group: PermGroup, p: int, caps: Caps | None = None
) -> tuple[bool, list[PermGroup]]:
    """Whether the alternating O_p / O_{p'} tower reaches the whole group.

    Returns (flag, series); the series starts at the trivial subgroup and
    records each strictly growing term, realised as subgroups of ``group``.
    Quotients are realised as faithful coset actions.
    """
    caps = caps or default_caps()
    if not is_prime(p):
        raise ParameterError(f"{p} is not prime")
    series = [PermGroup.trivial(group.degree)]
    current = series[0]
    step_p = True
    stalled = False
    while current.order() < group.order():
        if current.is_trivial():
            layer = core_p(group, p, caps) if step_p else core_p_prime(group, p, caps)
            nxt = layer
        else:
            act = quotient_action(group, current, caps)
            quot = act.image
            layer = core_p(quot, p, caps) if step_p else core_p_prime(quot, p, caps)
            nxt = act.preimage_of_subgroup(layer) if not layer.is_trivial() else current
        if nxt.order() == current.order():
            if stalled:
                return False, series
            stalled = True
        else:
            stalled = False
            series.append(nxt)
            current = nxt
        step_p = not step_p
    return True, series


# ---------------------------------------------------------------------------
# misc helpers used by the verifiers


def subgroup_product_order(parts: Sequence[PermGroup], caps: Caps | None = None) -> int:
    """Size of the product *set* A1 A2 ... Ak (not necessarily a group)."""
    caps = caps or default_caps()
    if not parts:
        return 1
    degree = parts[0].degree
    for part in parts:
        caps.check_enumerate(part.order())
    current: set[bytes] = {identity_images(degree).tobytes()}
    for part in parts:
        nxt: set[bytes] = set()
        part_arrays = [a.copy() for a in part.element_arrays()]
        for key in current:
            a = np.frombuffer(key, dtype=identity_images(degree).dtype)
            for barr in part_arrays:
                nxt.add(mul(a, barr).tobytes())
        current = nxt
    return len(current)


def quotient_group(group: PermGroup, normal: PermGroup, caps: Caps | None = None) -> CosetAction:
    """Faithful permutation realisation of G/N (alias for quotient_action)."""
    return quotient_action(group, normal, caps)
