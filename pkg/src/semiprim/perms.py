"""Permutations of {0..n-1} stored as image arrays.

Composition convention, fixed globally: ``compose(g, h)`` applies ``g``
first and ``h`` second, so ``x ^ (g*h) = (x^g)^h``.  This is the usual
right-action convention; products written in formulas translate directly
to ``*`` chains.

Internally a permutation is a read-only numpy array ``images`` with
``images[i]`` the image of point ``i``.  Hot loops in the rest of the
library work on raw arrays via :func:`mul`, :func:`inv` and
:func:`conj`; the :class:`Permutation` wrapper is the API surface.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DegreeMismatch, MalformedPermutation


def dtype_for(degree: int):
    """Smallest safe integer dtype for a given degree."""
    return np.int16 if degree <= 32767 else np.int32


def identity_images(degree: int) -> np.ndarray:
    arr = np.arange(degree, dtype=dtype_for(degree))
    arr.setflags(write=False)
    return arr


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Image array of 'apply a, then b'."""
    return b[a]


def inv(a: np.ndarray) -> np.ndarray:
    out = np.empty_like(a)
    out[a] = np.arange(len(a), dtype=a.dtype)
    return out


def conj(a: np.ndarray, g: np.ndarray, g_inv: np.ndarray | None = None) -> np.ndarray:
    """Image array of ``g^-1 * a * g``."""
    if g_inv is None:
        g_inv = inv(g)
    return g[a[g_inv]]


def is_identity(a: np.ndarray) -> bool:
    return bool((a == np.arange(len(a), dtype=a.dtype)).all())


def _validate(arr: np.ndarray) -> None:
    n = len(arr)
    if n == 0:
        raise MalformedPermutation("degree must be positive")
    seen = np.zeros(n, dtype=bool)
    if arr.min(initial=0) < 0 or arr.max(initial=-1) >= n:
        raise MalformedPermutation("image out of range")
    seen[arr] = True
    if not seen.all():
        raise MalformedPermutation("images are not a bijection")


class Permutation:
    """A bijection of {0..n-1}; immutable and hashable."""

    __slots__ = ("images", "_key")

    def __init__(self, images: Sequence[int] | np.ndarray, *, _trusted: bool = False):
        arr = np.asarray(images)
        want = dtype_for(len(arr))
        if arr.dtype != want or arr.flags.writeable:
            arr = arr.astype(want)
        if not _trusted:
            _validate(arr)
        arr.setflags(write=False)
        self.images = arr
        self._key: bytes | None = None

    # -- constructors ------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(identity_images(degree), _trusted=True)

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint-or-not cycles, applied left to right."""
        arr = np.arange(degree, dtype=dtype_for(degree))
        for cyc in cycles:
            step = np.arange(degree, dtype=arr.dtype)
            for a, b in zip(cyc, cyc[1:]):
                step[a] = b
            if cyc:
                step[cyc[-1]] = cyc[0]
            arr = step[arr]
        return cls(arr)

    @classmethod
    def _raw(cls, arr: np.ndarray) -> "Permutation":
        return cls(arr, _trusted=True)

    # -- basic protocol ----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return int(self.images[point])

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} != {other.degree}")
        return Permutation(mul(self.images, other.images), _trusted=True)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = identity_images(self.degree)
        base = self.images
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return Permutation(result, _trusted=True)

    def inverse(self) -> "Permutation":
        return Permutation(inv(self.images), _trusted=True)

    def conjugated_by(self, g: "Permutation") -> "Permutation":
        if self.degree != g.degree:
            raise DegreeMismatch(f"degrees {self.degree} != {g.degree}")
        return Permutation(conj(self.images, g.images), _trusted=True)

    def commutator(self, other: "Permutation") -> "Permutation":
        """[self, other] = self^-1 other^-1 self other."""
        a, b = self.images, other.images
        return Permutation(mul(mul(mul(inv(a), inv(b)), a), b), _trusted=True)

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.images.tobytes()
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.degree == other.degree and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # -- queries -----------------------------------------------------

    def is_identity(self) -> bool:
        return is_identity(self.images)

    def moved_points(self) -> list[int]:
        idx = np.nonzero(self.images != np.arange(self.degree, dtype=self.images.dtype))[0]
        return [int(i) for i in idx]

    def fixes(self, points: Iterable[int]) -> bool:
        pts = np.fromiter(points, dtype=np.int64)
        return bool((self.images[pts] == pts).all())

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = np.zeros(self.degree, dtype=bool)
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = int(self.images[i])
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = int(self.images[j])
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __repr__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return f"Permutation.identity({self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)
        return f"<{body} deg={self.degree}>"


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Apply ``g`` first, then ``h``."""
    return g * h


def all_permutations(degree: int) -> Iterator[Permutation]:
    """Every permutation of {0..degree-1}, lexicographic; oracle-sized only."""
    import itertools

    for tup in itertools.permutations(range(degree)):
        yield Permutation(np.array(tup), _trusted=True)
