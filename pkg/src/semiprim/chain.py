"""Deterministic Schreier-Sims stabiliser chains on raw image arrays.

Reproducibility rules, fixed once:

* base points are taken from the caller's hint first (in hint order),
  then in ascending point order, always skipping points the candidate
  generator fixes;
* orbits grow by breadth-first closure with generators applied in
  insertion order, so identical inputs yield identical chains, orbits
  and transversals;
* no randomness anywhere.

Hint points are materialised as chain levels *before* any generator is
processed, so they always form a base prefix; pointwise stabilisers of
a hint set therefore fall out of the strong generating set by a filter.

``assume_order`` is an optimisation hook: when the caller has *proved*
an upper bound for the generated group (for example, all generators are
members of a known group), construction may stop as soon as the product
of orbit lengths reaches the bound, because that product never exceeds
the true order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import CapExceeded, InconsistencyError
from .perms import identity_images, inv, is_identity, mul


class _Level:
    __slots__ = ("point", "gens", "orbit", "transversal", "tinv", "done", "closed_gens")

    def __init__(self, point: int, identity: np.ndarray):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [point]
        self.transversal: dict[int, np.ndarray] = {point: identity}
        self.tinv: dict[int, np.ndarray] = {point: identity}
        self.done: set[tuple[int, int]] = set()
        self.closed_gens = 0

    def inverse_transversal(self, p: int) -> np.ndarray:
        u = self.tinv.get(p)
        if u is None:
            u = inv(self.transversal[p])
            self.tinv[p] = u
        return u


class StabilizerChain:
    def __init__(
        self,
        degree: int,
        gen_arrays: Iterable[np.ndarray],
        base_hint: Sequence[int] = (),
        assume_order: int | None = None,
    ):
        self.degree = degree
        self.identity = identity_images(degree)
        self.base: list[int] = []
        self._base_arr = np.empty(0, dtype=np.int64)
        self.levels: list[_Level] = []
        self.strong: list[np.ndarray] = []
        seen = set()
        hint = []
        for b in base_hint:
            if b not in seen:
                seen.add(b)
                hint.append(int(b))
        for b in hint:
            self._append_level(b)
        for g in gen_arrays:
            if not is_identity(g):
                self._insert_strong(np.asarray(g))
        self._run(assume_order)

    # ------------------------------------------------------------------
    # construction internals

    def _append_level(self, point: int) -> None:
        self.levels.append(_Level(point, self.identity))
        self.base.append(point)
        self._base_arr = np.asarray(self.base, dtype=np.int64)

    def _new_base_point(self, arr: np.ndarray) -> int:
        moved = np.nonzero(arr != self.identity)[0]
        if len(moved) == 0:
            raise InconsistencyError("asked for a base point of the identity")
        return int(moved[0])

    def _insert_strong(self, h: np.ndarray) -> int:
        """Register a new strong generator; returns its deepest level index."""
        if len(self.base):
            imgs = h[self._base_arr]
            neq = imgs != self._base_arr
            if neq.any():
                d = int(np.argmax(neq))
            else:
                self._append_level(self._new_base_point(h))
                d = len(self.levels) - 1
        else:
            self._append_level(self._new_base_point(h))
            d = 0
        self.strong.append(h)
        for i in range(d + 1):
            lvl = self.levels[i]
            lvl.gens.append(h)
            self._extend_orbit(lvl)
        return d

    def _extend_orbit(self, lvl: _Level) -> None:
        new_gens = lvl.gens[lvl.closed_gens :]
        if not new_gens:
            return
        boundary = len(lvl.orbit)
        i = 0
        while i < boundary:
            p = lvl.orbit[i]
            up = lvl.transversal[p]
            for g in new_gens:
                q = int(g[p])
                if q not in lvl.transversal:
                    lvl.transversal[q] = mul(up, g)
                    lvl.orbit.append(q)
            i += 1
        while i < len(lvl.orbit):
            p = lvl.orbit[i]
            up = lvl.transversal[p]
            for g in lvl.gens:
                q = int(g[p])
                if q not in lvl.transversal:
                    lvl.transversal[q] = mul(up, g)
                    lvl.orbit.append(q)
            i += 1
        lvl.closed_gens = len(lvl.gens)

    def _run(self, assume_order: int | None) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            if assume_order is not None and self.order() == assume_order:
                return
            j = self._check_level(i)
            if j is None:
                i -= 1
            else:
                i = j

    def _check_level(self, i: int) -> int | None:
        """Sift unchecked Schreier generators of level ``i``.

        Returns ``None`` once the level is complete; otherwise inserts the
        non-trivial residue as a strong generator and returns the deepest
        level index whose verification must resume.
        """
        lvl = self.levels[i]
        while True:
            progressed = False
            for g_idx in range(len(lvl.gens)):
                g = lvl.gens[g_idx]
                for p_idx in range(len(lvl.orbit)):
                    if (p_idx, g_idx) in lvl.done:
                        continue
                    progressed = True
                    lvl.done.add((p_idx, g_idx))
                    j = self._test_pair(lvl, i, p_idx, g_idx, g)
                    if j is not None:
                        return j
            if not progressed:
                return None

    def _test_pair(self, lvl: _Level, i: int, p_idx: int, g_idx: int, g: np.ndarray) -> int | None:
        p = lvl.orbit[p_idx]
        up = lvl.transversal[p]
        q = int(g[p])
        sch = mul(mul(up, g), lvl.inverse_transversal(q))
        if is_identity(sch):
            return None
        h, j = self.strip(sch, i + 1)
        if h is None:
            return None
        if j == len(self.levels):
            self._append_level(self._new_base_point(h))
            j = len(self.levels) - 1
        self._insert_strong(h)
        return j

    # ------------------------------------------------------------------
    # queries

    def strip(self, arr: np.ndarray, start: int = 0) -> tuple[np.ndarray | None, int]:
        """Sift ``arr`` (which fixes base[:start]) through the chain.

        Returns ``(None, len(levels))`` if the element sifts to the
        identity, else ``(residue, level)`` where the residue fixes
        ``base[:level]`` and fails at ``level`` (``level == len(levels)``
        when the residue fixes the whole base).
        """
        g = arr
        idx = start
        nlev = len(self.levels)
        while idx < nlev:
            tail = self._base_arr[idx:]
            neq = g[tail] != tail
            if not neq.any():
                break
            idx += int(np.argmax(neq))
            lvl = self.levels[idx]
            p = int(g[lvl.point])
            u = lvl.transversal.get(p)
            if u is None:
                return g, idx
            g = mul(g, lvl.inverse_transversal(p))
            idx += 1
        if is_identity(g):
            return None, nlev
        return g, nlev

    def contains(self, arr: np.ndarray) -> bool:
        return self.strip(arr)[0] is None

    def order(self) -> int:
        n = 1
        for lvl in self.levels:
            n *= len(lvl.orbit)
        return n

    def prefix_stabilizer_gens(self, k: int) -> list[np.ndarray]:
        """Strong generators of the pointwise stabiliser of base[:k]."""
        if k <= 0:
            return list(self.strong)
        pref = self._base_arr[:k]
        return [s for s in self.strong if bool((s[pref] == pref).all())]

    def base_key(self, arr: np.ndarray) -> tuple[int, ...]:
        """Injective key for *members*: images of the base points."""
        return tuple(int(x) for x in arr[self._base_arr])

    def element_arrays(self, cap: int | None = None) -> Iterator[np.ndarray]:
        """Yield each element exactly once, identity first.

        Yields read-only arrays that may be shared; callers must not
        mutate them.  Order: transversal-product traversal, orbits in
        discovery order.
        """
        if cap is not None and self.order() > cap:
            raise CapExceeded(f"group order {self.order()} exceeds streaming cap {cap}")
        nlev = len(self.levels)

        def rec(i: int) -> Iterator[np.ndarray]:
            if i == nlev:
                yield self.identity
                return
            lvl = self.levels[i]
            for p in lvl.orbit:
                if p == lvl.point:
                    yield from rec(i + 1)
                else:
                    u = lvl.transversal[p]
                    for h in rec(i + 1):
                        yield mul(h, u)

        yield from rec(0)
