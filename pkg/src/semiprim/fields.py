"""Tiny finite fields GF(q^a) in a polynomial basis, for the vector-space
family builders.  Elements are tuples of length ``a`` with entries mod q
(coefficients of 1, t, ..., t^{a-1}).  Deterministic choices throughout:
the modulus is the first monic irreducible polynomial in lexicographic
order, the primitive element the first generator of the unit group.
"""

from __future__ import annotations

import itertools

from .errors import ParameterError
from .numutil import is_prime


def _poly_divmod(num: list[int], den: list[int], q: int) -> tuple[list[int], list[int]]:
    num = list(num)
    deg_d = len(den) - 1
    inv_lead = pow(den[-1], q - 2, q) if den[-1] != 1 else 1
    out = [0] * max(len(num) - deg_d, 0)
    for i in range(len(num) - 1, deg_d - 1, -1):
        coef = (num[i] * inv_lead) % q
        out[i - deg_d] = coef
        if coef:
            for j, d in enumerate(den):
                num[i - deg_d + j] = (num[i - deg_d + j] - coef * d) % q
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


def _is_irreducible(poly: list[int], q: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            den = list(tail) + [1]
            _, rem = _poly_divmod(poly, den, q)
            if len(rem) == 1 and rem[0] == 0:
                return False
    return True


class GF:
    """The field with q^a elements; see module docstring for conventions."""

    def __init__(self, q: int, a: int):
        if not is_prime(q) or a < 1:
            raise ParameterError("GF wants a prime q and a >= 1")
        self.q = q
        self.a = a
        self.size = q**a
        if a == 1:
            self.modulus = [0, 1]
        else:
            self.modulus = None
            for tail in itertools.product(range(q), repeat=a):
                cand = list(tail) + [1]
                if _is_irreducible(cand, q):
                    self.modulus = cand
                    break
            if self.modulus is None:
                raise ParameterError("no irreducible polynomial found (impossible)")
        self.zero = (0,) * a
        self.one = (1,) + (0,) * (a - 1)
        self.elements = [tuple(t) for t in itertools.product(range(q), repeat=a)]

    def add(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((u + v) % self.q for u, v in zip(x, y))

    def neg(self, x: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-u) % self.q for u in x)

    def mul(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        prod = [0] * (2 * self.a - 1)
        for i, u in enumerate(x):
            if not u:
                continue
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.q
        if self.a == 1:
            return (prod[0] % self.q,)
        _, rem = _poly_divmod(prod, self.modulus, self.q)
        rem = list(rem) + [0] * (self.a - len(rem))
        return tuple(v % self.q for v in rem[: self.a])

    def power(self, x: tuple[int, ...], n: int) -> tuple[int, ...]:
        out = self.one
        base = x
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def inv(self, x: tuple[int, ...]) -> tuple[int, ...]:
        if x == self.zero:
            raise ZeroDivisionError("inverse of zero in GF")
        return self.power(x, self.size - 2)

    def scalar(self, c: int) -> tuple[int, ...]:
        return (c % self.q,) + (0,) * (self.a - 1)

    def basis(self, k: int) -> tuple[int, ...]:
        out = [0] * self.a
        out[k] = 1
        return tuple(out)

    def primitive(self) -> tuple[int, ...]:
        target = self.size - 1
        for cand in self.elements:
            if cand == self.zero:
                continue
            order = 1
            acc = cand
            while acc != self.one:
                acc = self.mul(acc, cand)
                order += 1
            if order == target:
                return cand
        raise ParameterError("no primitive element found (impossible)")


def gl_generators(field: GF, n: int) -> list[list[list[tuple[int, ...]]]]:
    """Generators of GL_n over the field: all unit transvections plus the
    diagonal matrix with a primitive element in the first slot (matrices as
    row-lists; the matrix acts on column vectors v by v -> M v)."""
    mats = []
    if n > 1:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]
                m[i][j] = field.one
                mats.append(m)
    prim = field.primitive()
    if prim != field.one:
        m = [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]
        m[0][0] = prim
        mats.append(m)
    return mats
