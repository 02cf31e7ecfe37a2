"""Exact integer kernel.

Integer square roots, remainders, factorization, squarefree decomposition,
the Moebius function and a few numpy sieves used by the range sweeps.
Rationals are carried as :class:`fractions.Fraction` (aliased here as
``ExactRational``); Python integers never overflow, so the only width
limits are the ones enforced on the vectorized fast paths.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

ExactRational = Fraction

SIEVE_LIMIT = 1 << 20
# isqrt_array is exact only below this bound (see its docstring)
ISQRT_ARRAY_LIMIT = 1 << 62


class SquarefreeDecomp(NamedTuple):
    """``n == p_part * q_part**2`` with ``p_part`` squarefree."""

    p_part: int
    q_part: int


Factorization = list[tuple[int, int]]


def isqrt(x: int) -> int:
    if x < 0:
        raise ValueError(f"isqrt requires x >= 0, got {x}")
    return math.isqrt(x)


def isqrt_array(x: np.ndarray) -> np.ndarray:
    """Elementwise floor square root of a nonnegative int64 array.

    The float64 square root is only used as a seed; two integer correction
    passes in each direction make the result exact for ``x < 2**62``
    (seed error is below one there, and ``(r + 1)**2`` cannot overflow).
    """
    x = np.asarray(x, dtype=np.int64)
    if x.size and (int(x.min()) < 0 or int(x.max()) >= ISQRT_ARRAY_LIMIT):
        raise ValueError("isqrt_array requires 0 <= x < 2**62")
    r = np.sqrt(x.astype(np.float64)).astype(np.int64)
    for _ in range(2):
        r -= r * r > x
    for _ in range(2):
        r += (r + 1) * (r + 1) <= x
    return r


def rem(a: int, b: int) -> int:
    """Smallest nonnegative remainder of ``a`` on division by ``b``."""
    if b < 1:
        raise ValueError(f"rem requires a positive divisor, got {b}")
    return a % b


@lru_cache(maxsize=None)
def _small_primes() -> tuple[int, ...]:
    return tuple(int(p) for p in primes_up_to(SIEVE_LIMIT))


def primes_up_to(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array (sieve of Eratosthenes)."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if sieve[p]:
            sieve[p * p :: 2 * p] = False
    return np.flatnonzero(sieve).astype(np.int64)


def squarefree_mask(limit: int) -> np.ndarray:
    """Boolean array ``m`` of length ``limit + 1`` with ``m[n]`` true iff n is squarefree."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[0] = False
    for p in primes_up_to(math.isqrt(limit)):
        mask[int(p) * int(p) :: int(p) * int(p)] = False
    return mask


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# the twelve bases above admit no strong pseudoprime below this bound
_MR_EXACT_BOUND = 318_665_857_834_031_151_167_461


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _strong_lucas(n: int) -> bool:
    """Strong Lucas probable-prime test with Selfridge's choice of D."""
    from .symbols import jacobi

    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while True:
        j = jacobi(D, n)
        if j == -1:
            break
        if j == 0 and abs(D) != n:
            return False
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def halve(x: int) -> int:
        return (x + n if x % 2 else x) // 2 % n

    # left-to-right binary ladder for U_d, V_d, Q^d
    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = halve(P * U + V), halve(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Primality test, exact below 3.18e23 and Baillie-PSW above.

    Trial division for small n, then Miller-Rabin with the first twelve
    prime bases. Past the bound where those bases are known to suffice a
    strong Lucas test is added; no composite passing both is known.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n < 41 * 41:
        return True
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_strong_probable_prime(n, a, d, s) for a in _MR_BASES):
        return False
    return n < _MR_EXACT_BOUND or _strong_lucas(n)


def _pollard_brent(n: int) -> int:
    # deterministic: fixed starting points and increments
    if n % 2 == 0:
        return 2
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split_large(d, out)
    _split_large(n // d, out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ``[(prime, exponent), ...]``, primes increasing."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors[p] = e
    if n > 1:
        if n < SIEVE_LIMIT * SIEVE_LIMIT:
            factors[n] = factors.get(n, 0) + 1
        else:
            _split_large(n, factors)
    return sorted(factors.items())


def squarefree_decomp(n: int) -> SquarefreeDecomp:
    if n < 1:
        raise ValueError(f"squarefree_decomp requires n >= 1, got {n}")
    p_part = q_part = 1
    for p, e in factorize(n):
        p_part *= p ** (e % 2)
        q_part *= p ** (e // 2)
    return SquarefreeDecomp(p_part, q_part)


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for _, e in factorize(abs(n)))


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)

