"""Small integer helpers (trial division is plenty at desk scale)."""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorisation as {p: multiplicity}, ascending."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def is_prime_power(n: int) -> tuple[bool, int | None]:
    """(True, p) if n is a nontrivial power of a single prime p."""
    if n < 2:
        return False, None
    fac = prime_factors(n)
    if len(fac) == 1:
        return True, next(iter(fac))
    return False, None
