"""Legendre, Jacobi and Kronecker symbols.

All three return a plain ``int`` in ``{-1, 0, 1}``. The Jacobi symbol is
evaluated by the reciprocity loop, so no factorization of the lower
argument is ever needed. :func:`kronecker_character` builds the whole
period of ``j -> (d/j)`` for a fundamental discriminant as a numpy array,
which is what the class number sums consume.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .arith import factorize, is_prime


def jacobi(a: int, m: int) -> int:
    if m < 1 or m % 2 == 0:
        raise ValueError(f"jacobi requires an odd positive modulus, got {m}")
    a %= m
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                sign = -sign
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            sign = -sign
        a %= m
    return sign if m == 1 else 0


def legendre(a: int, p: int, *, check_prime: bool = False) -> int:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"legendre requires an odd prime, got {p}")
    if check_prime and not is_prime(p):
        raise ValueError(f"legendre requires an odd prime, got {p}")
    return jacobi(a, p)


def kronecker(a: int, m: int) -> int:
    if a == 0 and m == 0:
        raise ValueError("kronecker(0, 0) is undefined")
    if m == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if m < 0:
        m = -m
        if a < 0:
            result = -1
    e = (m & -m).bit_length() - 1
    if e:
        if a % 2 == 0:
            return 0
        m >>= e
        # (a/2) = (2/a) for odd a: +1 iff a = +-1 (mod 8)
        if e % 2 and a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, m)


@lru_cache(maxsize=4096)
def legendre_table(p: int) -> np.ndarray:
    """``t[j] = (j/p)`` for ``0 <= j < p``, built by squaring (no symbol calls)."""
    t = np.full(p, -1, dtype=np.int8)
    k = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    t[(k * k) % p] = 1
    t[0] = 0
    t.setflags(write=False)
    return t


def kronecker_character(d: int) -> np.ndarray:
    """One period ``chi[j] = (d/j)``, ``0 <= j < |d|``, for a fundamental discriminant ``d``.

    Uses the factorization of ``d`` into prime discriminants: each odd
    prime ``p | d`` contributes ``(j/p)`` and the 2-part is one of the
    characters of conductor 4 or 8. Agreement with :func:`kronecker` is
    covered by the test suite.
    """
    n = abs(d)
    chi = np.ones(n, dtype=np.int8)
    odd_part_disc = 1
    for p, _ in factorize(n):
        if p == 2:
            continue
        chi *= np.resize(legendre_table(p), n)
        odd_part_disc *= p if p % 4 == 1 else -p
    two_part = d // odd_part_disc
    if two_part != 1:
        j = np.arange(8, dtype=np.int64)
        minus4 = np.where(j % 2 == 0, 0, np.where(j % 4 == 1, 1, -1))
        plus8 = np.where(j % 2 == 0, 0, np.where((j % 8 == 1) | (j % 8 == 7), 1, -1))
        local = {-4: minus4, 8: plus8, -8: minus4 * plus8}[two_part]
        chi *= np.resize(local.astype(np.int8), n)
    return chi
