"""Permutation groups and their actions.

:class:`PermGroup` is immutable after construction: the stabiliser chain
is built eagerly and every query is read-only, so instances are safe to
share between threads.  Derived chains (for stabilisers of specific
points) are cached per group.

Group homomorphisms induced by actions are realised through a *combined*
permutation domain whose chain keeps the image points in a base prefix;
images, kernels and preimages then all reduce to transversal walks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .caps import Caps, default_caps
from .chain import StabilizerChain
from .errors import (
    CapExceeded,
    DegreeMismatch,
    InconsistencyError,
    NotASubgroup,
    NotInvariant,
    ParameterError,
)
from .perms import Permutation, identity_images, inv, is_identity, mul


class PermGroup:
    """A finite permutation group on {0..degree-1}.

    Built from generators; the chain provides order, membership and
    element streaming.  ``assume_order`` is an internal optimisation for
    callers that already hold a proven upper bound on the order.
    """

    def __init__(
        self,
        degree: int,
        generators: Iterable[Permutation | Sequence[int]],
        *,
        name: str | None = None,
        base_hint: Sequence[int] = (),
        assume_order: int | None = None,
    ):
        if degree <= 0:
            raise ParameterError("degree must be positive")
        gens = []
        for g in generators:
            p = g if isinstance(g, Permutation) else Permutation(g)
            if p.degree != degree:
                raise DegreeMismatch(f"generator degree {p.degree} != {degree}")
            if not p.is_identity():
                gens.append(p)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self.name = name
        self.chain = StabilizerChain(
            degree,
            [g.images for g in gens],
            base_hint=base_hint,
            assume_order=assume_order,
        )
        self._order = self.chain.order()
        self._rebased: dict[tuple[int, ...], StabilizerChain] = {}
        self._stab_cache: dict[tuple[int, ...], PermGroup] = {}

    # ------------------------------------------------------------------
    # basics

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, [])

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        if degree == 1:
            return cls.trivial(1)
        gens = [Permutation.from_cycles(degree, [(0, 1)])]
        if degree > 2:
            gens.append(Permutation.from_cycles(degree, [tuple(range(degree))]))
        return cls(degree, gens, name=f"Sym({degree})")

    @classmethod
    def alternating(cls, degree: int) -> "PermGroup":
        if degree <= 2:
            return cls.trivial(max(degree, 1))
        gens = [Permutation.from_cycles(degree, [(0, 1, 2)])]
        if degree > 3:
            if degree % 2:
                gens.append(Permutation.from_cycles(degree, [tuple(range(degree))]))
            else:
                gens.append(Permutation.from_cycles(degree, [tuple(range(1, degree))]))
        return cls(degree, gens, name=f"Alt({degree})")

    @classmethod
    def cyclic(cls, degree: int) -> "PermGroup":
        return cls(degree, [Permutation.from_cycles(degree, [tuple(range(degree))])])

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self.chain.contains(g.images)

    def contains_array(self, arr: np.ndarray) -> bool:
        return self.chain.contains(arr)

    def __repr__(self) -> str:
        tag = self.name or f"{len(self.generators)} gens"
        return f"PermGroup(degree={self.degree}, order={self._order}, {tag})"

    # ------------------------------------------------------------------
    # elements

    def element_arrays(self, cap: int | None = None) -> Iterator[np.ndarray]:
        """Stream raw image arrays, identity first; arrays are read-only."""
        yield from self.chain.element_arrays(cap)

    def elements(self, caps: Caps | None = None) -> Iterator[Permutation]:
        """Stream each element exactly once without storing them all."""
        caps = caps or default_caps()
        caps.check_stream(self._order)
        for arr in self.chain.element_arrays():
            yield Permutation(arr, _trusted=True)

    def element_key(self, arr: np.ndarray) -> tuple[int, ...]:
        """Injective key for members (base-point images)."""
        return self.chain.base_key(arr)

    # ------------------------------------------------------------------
    # orbits

    def orbit(self, x: int) -> list[int]:
        """Orbit of ``x`` in BFS discovery order, generators in order."""
        if not 0 <= x < self.degree:
            raise ParameterError(f"point {x} out of range")
        out = [x]
        seen = {x}
        qi = 0
        gens = [g.images for g in self.generators]
        while qi < len(out):
            p = out[qi]
            qi += 1
            for g in gens:
                q = int(g[p])
                if q not in seen:
                    seen.add(q)
                    out.append(q)
        return out

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def min_orbit_reps(self) -> list[int]:
        return [orb[0] for orb in self.orbits()]

    # ------------------------------------------------------------------
    # stabilisers and subgroups

    def rebased_chain(self, hint: tuple[int, ...]) -> StabilizerChain:
        ch = self._rebased.get(hint)
        if ch is None:
            ch = StabilizerChain(
                self.degree,
                [g.images for g in self.generators],
                base_hint=hint,
                assume_order=self._order,
            )
            self._rebased[hint] = ch
        return ch

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        hint = tuple(dict.fromkeys(int(p) for p in points))
        cached = self._stab_cache.get(hint)
        if cached is not None:
            return cached
        ch = self.rebased_chain(hint)
        gens = ch.prefix_stabilizer_gens(len(hint))
        sub = PermGroup(self.degree, [Permutation(a, _trusted=True) for a in gens])
        self._stab_cache[hint] = sub
        return sub

    def point_stabilizer(self, x: int) -> "PermGroup":
        return self.pointwise_stabilizer([x])

    def setwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        """Setwise stabiliser; implemented for |S| <= 2 only.

        For an edge {x,y} this is the pointwise stabiliser plus, when one
        exists, a single element swapping x and y found by a transversal
        walk.
        """
        pts = sorted(set(int(p) for p in points))
        if len(pts) == 1:
            return self.point_stabilizer(pts[0])
        if len(pts) != 2:
            raise ParameterError("setwise stabiliser implemented for |S| <= 2 only")
        x, y = pts
        ch = self.rebased_chain((x, y))
        gens = [Permutation(a, _trusted=True) for a in ch.prefix_stabilizer_gens(2)]
        lvl0 = ch.levels[0]
        swap = None
        if y in lvl0.transversal:
            t = lvl0.transversal[y]
            z = int(inv(t)[x])
            lvl1 = ch.levels[1]
            s = lvl1.transversal.get(z)
            if s is not None:
                swap = mul(s, t)
        if swap is not None:
            gens.append(Permutation(swap, _trusted=True))
        return PermGroup(self.degree, gens)

    def subgroup(self, gens: Iterable[Permutation], *, check: bool = True) -> "PermGroup":
        gens = list(gens)
        if check:
            for g in gens:
                if g not in self:
                    raise NotASubgroup(f"{g!r} is not in the ambient group")
        return PermGroup(self.degree, gens, assume_order=self._order)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        if self.degree != other.degree:
            return False
        return all(g in other for g in self.generators)

    def is_normal_in(self, other: "PermGroup") -> bool:
        """Whether ``self`` is normalised by ``other`` (requires self <= other)."""
        if not self.is_subgroup_of(other):
            return False
        for g in other.generators:
            for s in self.generators:
                if not self.contains_array(np.asarray(s.conjugated_by(g).images)):
                    return False
        return True

    def normalizes(self, other: "PermGroup") -> bool:
        """Whether every generator of ``self`` normalises ``other``."""
        for g in self.generators:
            for s in other.generators:
                if not other.contains_array(s.conjugated_by(g).images):
                    return False
        return True

    def conjugated_by(self, g: Permutation) -> "PermGroup":
        return PermGroup(self.degree, [s.conjugated_by(g) for s in self.generators])

    def same_group(self, other: "PermGroup") -> bool:
        return (
            self.degree == other.degree
            and self._order == other.order()
            and self.is_subgroup_of(other)
        )

    def join(self, other: "PermGroup", assume_order: int | None = None) -> "PermGroup":
        if self.degree != other.degree:
            raise DegreeMismatch("cannot join groups of different degree")
        return PermGroup(
            self.degree,
            list(self.generators) + list(other.generators),
            assume_order=assume_order,
        )

    def intersection_with(self, other: "PermGroup", caps: Caps | None = None) -> "PermGroup":
        """Intersection by streaming the smaller group through the other."""
        caps = caps or default_caps()
        small, big = (self, other) if self._order <= other.order() else (other, self)
        caps.check_enumerate(small.order())
        inter = PermGroup.trivial(self.degree)
        picked: list[Permutation] = []
        for arr in small.element_arrays():
            if big.contains_array(arr) and not inter.contains_array(arr):
                picked.append(Permutation(arr.copy(), _trusted=True))
                inter = PermGroup(self.degree, picked, assume_order=small.order())
        return inter

    # ------------------------------------------------------------------
    # actions

    def induced_action(self, domain: Sequence[int]) -> "InducedAction":
        return InducedAction(self, domain)

    def coset_action(self, subgroup: "PermGroup", caps: Caps | None = None) -> "CosetAction":
        return CosetAction(self, subgroup, caps=caps)


def group_from_generators(
    degree: int, gens: Iterable[Permutation | Sequence[int]], name: str | None = None
) -> PermGroup:
    """Spec-level constructor; see :class:`PermGroup`."""
    return PermGroup(degree, gens, name=name)


def reduce_generators(group: PermGroup) -> PermGroup:
    """Same group, greedily thinned generating set (first-come order)."""
    kept: list[Permutation] = []
    current = PermGroup.trivial(group.degree)
    for g in group.generators:
        if not current.contains_array(g.images):
            kept.append(g)
            current = PermGroup(group.degree, kept, assume_order=group.order())
            if current.order() == group.order():
                break
    current.name = group.name
    return current


class ActionHomomorphism:
    """Base for homomorphisms G -> Sym(m) realised on a combined domain.

    Attributes
    ----------
    source : PermGroup
    image : PermGroup of degree ``image_degree``
    kernel : PermGroup (subgroup of source)
    """

    source: PermGroup
    image: PermGroup
    kernel: PermGroup
    image_degree: int

    #: combined chain with image block as base prefix
    _combined: StabilizerChain
    #: combined point for each image point
    _blk: np.ndarray
    #: image point for each combined point (-1 outside the block)
    _comb2img: np.ndarray

    def _finish(
        self,
        combined_gen_arrays: list[np.ndarray],
        combined_degree: int,
        prebuilt: StabilizerChain | None = None,
    ) -> None:
        self._combined = prebuilt or StabilizerChain(
            combined_degree,
            combined_gen_arrays,
            base_hint=[int(b) for b in self._blk],
            assume_order=self.source.order(),
        )
        blk = self._blk
        kern_gens = []
        for s in self._combined.strong:
            if bool((s[blk] == blk).all()):
                kern_gens.append(Permutation(self._extract_source(s), _trusted=True))
        self.kernel = PermGroup(
            self.source.degree, kern_gens, assume_order=self.source.order()
        )
        if self.image.order() * self.kernel.order() != self.source.order():
            raise InconsistencyError(
                "action bookkeeping broken: |G| != |image| * |kernel|"
            )

    # block helpers -----------------------------------------------------

    def _restrict(self, arr: np.ndarray) -> np.ndarray:
        """Relabel a combined/source array to an image-degree array."""
        out = self._comb2img[arr[self._blk]]
        return out.astype(identity_images(self.image_degree).dtype)

    def _extract_source(self, arr: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def apply(self, g: Permutation) -> Permutation:
        raise NotImplementedError

    def preimage(self, h: Permutation) -> Permutation:
        """Some source element mapping onto ``h``; raises if h is not hit."""
        if h.degree != self.image_degree:
            raise DegreeMismatch("preimage argument has wrong degree")
        r = h.images.astype(np.int64)
        ident = np.arange(self.image_degree, dtype=np.int64)
        word: list[np.ndarray] = []
        for lvl in self._combined.levels[: self.image_degree]:
            j = int(self._comb2img[lvl.point])
            p_img = int(r[j])
            p_comb = int(self._blk[p_img])
            u = lvl.transversal.get(p_comb)
            if u is None:
                raise NotASubgroup("element is not in the image of the action")
            if p_comb != lvl.point:
                word.append(u)
                r = mul(r, inv(self._restrict(u)).astype(np.int64))
        if not bool((r == ident).all()):
            raise NotASubgroup("element is not in the image of the action")
        acc = self._combined.identity
        for u in reversed(word):
            acc = mul(acc, u)
        if not bool((self._restrict(acc) == h.images).all()):
            raise InconsistencyError("preimage walk produced a wrong lift")
        return Permutation(self._extract_source(acc), _trusted=True)

    def image_of_subgroup(self, sub: PermGroup) -> PermGroup:
        return PermGroup(
            self.image_degree,
            [self.apply(g) for g in sub.generators],
            assume_order=self.image.order(),
        )

    def preimage_of_subgroup(self, sub: PermGroup) -> PermGroup:
        gens = list(self.kernel.generators)
        gens.extend(self.preimage(g) for g in sub.generators)
        return PermGroup(self.source.degree, gens, assume_order=self.source.order())


class InducedAction(ActionHomomorphism):
    """Action of a group on an invariant ordered point set.

    ``domain`` is the invariant set; the image acts on ``range(len(domain))``
    with point ``i`` standing for ``domain[i]``.  The kernel is the
    pointwise stabiliser of the domain inside the source.
    """

    def __init__(self, source: PermGroup, domain: Sequence[int]):
        self.source = source
        self.domain = [int(p) for p in domain]
        if not self.domain:
            raise ParameterError("domain must be nonempty")
        if len(set(self.domain)) != len(self.domain):
            raise ParameterError("domain contains repeated points")
        self.image_degree = len(self.domain)
        self._blk = np.asarray(self.domain, dtype=np.int64)
        self._comb2img = np.full(source.degree, -1, dtype=np.int64)
        self._comb2img[self._blk] = np.arange(self.image_degree, dtype=np.int64)
        dom_set = set(self.domain)
        for g in source.generators:
            if any(int(g.images[p]) not in dom_set for p in self.domain):
                raise NotInvariant("domain is not invariant under the group")
        self.image = PermGroup(
            self.image_degree,
            [Permutation(self._restrict(g.images), _trusted=True) for g in source.generators],
        )
        self._finish(
            [g.images for g in source.generators],
            source.degree,
            prebuilt=source.rebased_chain(tuple(self.domain)),
        )

    def _extract_source(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def apply(self, g: Permutation) -> Permutation:
        return Permutation(self._restrict(g.images), _trusted=True)


class CosetAction(ActionHomomorphism):
    """Action of G on the right cosets of a subgroup H.

    Cosets are numbered in BFS discovery order starting from H itself;
    each coset is identified by the canonical (lexicographically minimal
    base-image) representative found by walking H's stabiliser chain.
    The kernel equals the core of H in G.
    """

    def __init__(self, source: PermGroup, subgroup: PermGroup, caps: Caps | None = None):
        caps = caps or default_caps()
        if subgroup.degree != source.degree:
            raise DegreeMismatch("subgroup degree differs from group degree")
        for g in subgroup.generators:
            if g not in source:
                raise NotASubgroup("alleged subgroup is not contained in the group")
        self.source = source
        self.subgroup = subgroup
        if source.order() % subgroup.order():
            raise InconsistencyError("subgroup order does not divide group order")
        n = source.order() // subgroup.order()
        caps.check_coset_index(n)
        self.image_degree = n

        reps: list[np.ndarray] = [self._canonical(identity_images(source.degree))]
        key2idx = {reps[0].tobytes(): 0}
        gen_arrays = [g.images for g in source.generators]
        images = [np.empty(n, dtype=np.int64) for _ in gen_arrays]
        qi = 0
        while qi < len(reps):
            rep = reps[qi]
            for gi, g in enumerate(gen_arrays):
                t = self._canonical(mul(rep, g))
                key = t.tobytes()
                idx = key2idx.get(key)
                if idx is None:
                    idx = len(reps)
                    if idx >= n:
                        raise InconsistencyError("found more cosets than the index")
                    key2idx[key] = idx
                    reps.append(t)
                images[gi][qi] = idx
            qi += 1
        if len(reps) != n:
            raise InconsistencyError("coset enumeration did not reach the full index")
        self.reps = reps
        self._key2idx = key2idx

        self.image = PermGroup(n, [Permutation(im, _trusted=True) for im in images])

        d = source.degree
        self._blk = np.arange(n, dtype=np.int64)
        self._comb2img = np.concatenate(
            [np.arange(n, dtype=np.int64), np.full(d, -1, dtype=np.int64)]
        )
        combined = []
        for gi, g in enumerate(gen_arrays):
            arr = np.concatenate(
                [images[gi], g.astype(np.int64) + n]
            )
            combined.append(arr.astype(identity_images(n + d).dtype))
        self._offset = n
        self._finish(combined, n + d)

    def _canonical(self, arr: np.ndarray) -> np.ndarray:
        r = arr
        for lvl in self.subgroup.chain.levels:
            if len(lvl.orbit) == 1:
                continue
            pts = np.asarray(lvl.orbit, dtype=np.int64)
            vals = r[pts]
            best = int(pts[np.argmin(vals)])
            if best != lvl.point:
                r = mul(lvl.transversal[best], r)
        return r

    def coset_index(self, g: Permutation | np.ndarray) -> int:
        arr = g.images if isinstance(g, Permutation) else g
        key = self._canonical(arr).tobytes()
        idx = self._key2idx.get(key)
        if idx is None:
            raise NotASubgroup("element is not in the acting group")
        return idx

    def _extract_source(self, arr: np.ndarray) -> np.ndarray:
        out = arr[self._offset :].astype(np.int64) - self._offset
        return out.astype(identity_images(self.source.degree).dtype)

    def apply(self, g: Permutation) -> Permutation:
        arr = g.images
        out = np.empty(self.image_degree, dtype=np.int64)
        for i, rep in enumerate(self.reps):
            out[i] = self._key2idx[self._canonical(mul(rep, arr)).tobytes()]
        return Permutation(out, _trusted=True)


class PairedHomomorphism(ActionHomomorphism):
    """Homomorphism given by explicit image permutations, one per source
    generator.  Used for actions that are not point actions of the source
    domain, e.g. conjugation on the element list of a subgroup.
    """

    def __init__(self, source: PermGroup, image_degree: int, image_gens: list[Permutation]):
        if len(image_gens) != len(source.generators):
            raise ParameterError("need exactly one image per source generator")
        self.source = source
        self.image_degree = image_degree
        self.image = PermGroup(image_degree, image_gens)
        d = source.degree
        self._blk = np.arange(image_degree, dtype=np.int64)
        self._comb2img = np.concatenate(
            [np.arange(image_degree, dtype=np.int64), np.full(d, -1, dtype=np.int64)]
        )
        self._offset = image_degree
        combined = []
        dt = identity_images(image_degree + d).dtype
        for img, g in zip(image_gens, source.generators):
            arr = np.concatenate(
                [img.images.astype(np.int64), g.images.astype(np.int64) + image_degree]
            )
            combined.append(arr.astype(dt))
        self._combined_gens = combined
        self._gen_images = {g.key(): img for g, img in zip(source.generators, image_gens)}
        self._src_chain: StabilizerChain | None = None
        self._finish(combined, image_degree + d)

    def _extract_source(self, arr: np.ndarray) -> np.ndarray:
        out = arr[self._offset :].astype(np.int64) - self._offset
        return out.astype(identity_images(self.source.degree).dtype)

    def apply(self, g: Permutation) -> Permutation:
        """Image of an arbitrary source element, via a source-prefix walk."""
        known = self._gen_images.get(g.key())
        if known is not None:
            return known
        if self._src_chain is None:
            d = self.source.degree
            self._src_chain = StabilizerChain(
                self.image_degree + d,
                self._combined_gens,
                base_hint=range(self._offset, self._offset + d),
                assume_order=self.source.order(),
            )
        r = g.images.astype(np.int64)
        word: list[np.ndarray] = []
        src_ident = np.arange(self.source.degree, dtype=np.int64)
        for lvl in self._src_chain.levels[: self.source.degree]:
            b = lvl.point - self._offset
            p_comb = int(r[b]) + self._offset
            u = lvl.transversal.get(p_comb)
            if u is None:
                raise NotASubgroup("element is not in the source group")
            if p_comb != lvl.point:
                word.append(u)
                u_src = self._extract_source(u).astype(np.int64)
                r = mul(r, inv(u_src).astype(np.int64))
        if not bool((r == src_ident).all()):
            raise NotASubgroup("element is not in the source group")
        acc = self._src_chain.identity
        for u in reversed(word):
            acc = mul(acc, u)
        if not bool((self._extract_source(acc) == g.images).all()):
            raise InconsistencyError("application walk produced a wrong image")
        return Permutation(self._restrict(acc), _trusted=True)


def quotient_action(group: PermGroup, normal: PermGroup, caps: Caps | None = None) -> CosetAction:
    """Faithful realisation of G/N as the coset action of G on N.

    The kernel of the returned action is exactly ``normal``; the image is
    the regular permutation representation of the quotient.
    """
    act = CosetAction(group, normal, caps=caps)
    if act.kernel.order() != normal.order():
        raise NotASubgroup("alleged normal subgroup is not normal")
    return act
