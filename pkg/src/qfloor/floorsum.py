"""Floor-of-square-root sums and the remainder sums attached to them.

``F(n)`` is the sum of ``floor(sqrt(j*n))`` for ``1 <= j <= n // 4`` and
``f(n) = F(n) - (n**2 - 1)/12``. Every closed form here is checked against
the definitional evaluator :func:`F_direct`, never the other way round.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .arith import factorize, isqrt_array, squarefree_decomp

CHUNK = 1 << 20
# largest n for which j*n < 2**62 for every j <= n // 4
_VECTOR_F_LIMIT = 1 << 32
# k*k stays below 2**63 for k < this bound
_VECTOR_K_LIMIT = 3_000_000_000


class NuDecomposition(NamedTuple):
    nu: int
    r: int


def nu_decomp(n: int) -> NuDecomposition:
    """Write ``n = 4*nu + r`` with ``0 <= r <= 3``."""
    nu, r = divmod(n, 4)
    return NuDecomposition(nu, r)


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")


def F_direct(n: int) -> int:
    _check_positive(n)
    nu = n // 4
    if nu < 64 or n >= _VECTOR_F_LIMIT:
        return sum(math.isqrt(j * n) for j in range(1, nu + 1))
    total = 0
    for start in range(1, nu + 1, CHUNK):
        j = np.arange(start, min(start + CHUNK, nu + 1), dtype=np.int64)
        total += int(isqrt_array(j * n).sum())
    return total


def f_of_n(n: int) -> Fraction:
    return Fraction(12 * F_direct(n) - n * n + 1, 12)


def rem_sq_sum(n: int, k_max: int) -> int:
    """Sum of ``(k*k) % n`` over ``1 <= k <= k_max``."""
    _check_positive(n)
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    if k_max < 64 or n >= _VECTOR_K_LIMIT:
        return sum(k * k % n for k in range(1, k_max + 1))
    total = 0
    for start in range(1, k_max + 1, CHUNK):
        k = np.arange(start, min(start + CHUNK, k_max + 1), dtype=np.int64)
        if start + CHUNK > _VECTOR_K_LIMIT:
            k %= n
        total += int(((k * k) % n).sum())
    return total


def _rem_sq_period_direct(n: int) -> int:
    # k and n - k have the same square mod n
    half = (n - 1) // 2
    total = 2 * rem_sq_sum(n, half)
    if n % 2 == 0:
        total += (n // 2) ** 2 % n
    return total


def _coprime_split(n: int) -> tuple[int, int]:
    """Split ``n`` into coprime factors, the smaller one as close to sqrt(n) as a greedy pass gets."""
    parts = sorted((p**e for p, e in factorize(n)), reverse=True)
    a = b = 1
    for q in parts:
        if a <= b:
            a *= q
        else:
            b *= q
    return a, b


def rem_sq_period_sum(n: int) -> int:
    """Sum of ``(k*k) % n`` over a full period ``0 <= k < n``.

    For composite ``n`` with at least two distinct prime factors the sum
    is regrouped through the Chinese remainder theorem: with ``n = a*b``
    coprime, ``k**2 mod n`` is ``(c + w) mod n`` where ``c`` runs over the
    lifted squares mod ``a`` and ``w`` over those mod ``b``. Counting the
    pairs with ``c + w >= n`` by a sorted search gives the exact sum in
    ``O((a + b) log b)`` instead of ``O(n)``.
    """
    _check_positive(n)
    if n < 4096 or n >= 1 << 31:
        return _rem_sq_period_direct(n)
    a, b = _coprime_split(n)
    if a == 1 or b == 1:
        return _rem_sq_period_direct(n)
    e1 = b * pow(b, -1, a) % n
    e2 = a * pow(a, -1, b) % n
    ka = np.arange(a, dtype=np.int64)
    kb = np.arange(b, dtype=np.int64)
    c = ((ka * ka) % a) * e1 % n
    w = np.sort(((kb * kb) % b) * e2 % n)
    wraps = b * a - int(np.searchsorted(w, n - c, side="left").sum())
    return b * int(c.sum()) + a * int(w.sum()) - n * wraps


def s_of_n(n: int) -> Fraction:
    """``(1/n) * sum_{k=1}^{n-1} (k*k) % n``."""
    if n < 2:
        raise ValueError(f"s_of_n requires n >= 2, got {n}")
    return Fraction(rem_sq_period_sum(n), n)


def s_of_n_direct(n: int) -> Fraction:
    if n < 2:
        raise ValueError(f"s_of_n requires n >= 2, got {n}")
    return Fraction(rem_sq_sum(n, n - 1), n)


def F_from_rem_sum(n: int, rems: int) -> Fraction:
    """Right-hand side of the remainder-sum formula for ``F(n)``.

    ``rems`` must be ``rem_sq_sum(n, 2 * (n // 4))``; callers that know it
    by other means (e.g. :func:`prime_power_rem_period_sum`) pass it in.
    """
    _check_positive(n)
    nu, r = nu_decomp(n)
    if r:
        q = squarefree_decomp(n).q_part
        return (
            2 * nu * nu
            - Fraction(nu * (8 * nu * nu + 6 * nu + 1), 3 * n)
            + Fraction(q - 1, 2)
            + Fraction(rems, n)
        )
    q_bar = squarefree_decomp(nu).q_part
    return (
        Fraction(4, 3) * nu * nu
        - Fraction(nu, 2)
        - Fraction(1, 12)
        + q_bar
        + Fraction(rems, 4 * nu)
    )


def F_closed(n: int) -> int:
    """``F(n)`` from the remainder-sum closed form (two cases on ``n mod 4``)."""
    value = F_from_rem_sum(n, rem_sq_sum(n, 2 * nu_decomp(n).nu))
    if value.denominator != 1:
        raise ArithmeticError(f"F_closed({n}) produced non-integral {value}")
    return int(value)


def prime_power_rem_period_sum(p: int, alpha: int) -> int:
    """Sum of ``(k*k) % p**alpha`` over ``0 <= k < p**alpha``, without an O(p**alpha) scan.

    Splits ``k = j*p + r``. The ``r = 0`` block reduces to the same sum two
    exponents lower (scaled by ``p**3``); for ``r != 0`` and odd ``p`` the
    remainders are the distinct values ``a_r + i*p``, so each block has a
    closed sum. For ``p = 2`` the odd squares are the residues ``1 (mod 8)``,
    each hit four times. Only the ``alpha = 1`` base needs a direct scan.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be >= 1, got {alpha}")
    if p == 2:
        if alpha <= 2:
            return alpha
        m = 2 ** (alpha - 3)
        odd = 4 * (m + 4 * m * (m - 1))
        return 8 * prime_power_rem_period_sum(2, alpha - 2) + odd
    base = sum(k * k % p for k in range(1, p))
    if alpha == 1:
        return base
    inner = p**3 * prime_power_rem_period_sum(p, alpha - 2) if alpha >= 3 else 0
    top = p ** (alpha - 1)
    return inner + top * base + (p - 1) * p**alpha * (top - 1) // 2


def f_mod4_closed(n: int) -> Fraction:
    """``f(n)`` for ``4 | n`` as ``-n/8 + Qbar + (1/n) * sum_{k <= n/2} (k*k) % n``."""
    _check_positive(n)
    if n % 4:
        raise ValueError(f"f_mod4_closed requires 4 | n, got {n}")
    q_bar = squarefree_decomp(n // 4).q_part
    return Fraction(-n, 8) + q_bar + Fraction(rem_sq_sum(n, n // 2), n)


def count_A_direct(n: int) -> int:
    """Number of ``k`` in ``[1, 2*(n//4) - 1]`` with ``n | k*k``."""
    _check_positive(n)
    top = 2 * (n // 4) - 1
    if top < 1:
        return 0
    if n >= _VECTOR_K_LIMIT:
        return sum(1 for k in range(1, top + 1) if k * k % n == 0)
    count = 0
    for start in range(1, top + 1, CHUNK):
        k = np.arange(start, min(start + CHUNK, top + 1), dtype=np.int64)
        count += int(np.count_nonzero((k * k) % n == 0))
    return count


def count_A_closed(n: int) -> int:
    _check_positive(n)
    if n % 4:
        return (squarefree_decomp(n).q_part - 1) // 2
    return squarefree_decomp(n // 4).q_part - 1


def prime_power_half_rem_sum(p: int, alpha: int) -> int:
    """Sum of ``(k*k) % p**alpha`` over ``1 <= k <= p**alpha // 2`` via the period sum."""
    n = p**alpha
    total = prime_power_rem_period_sum(p, alpha)
    if n % 2:
        return total // 2
    return (total + (n // 2) ** 2 % n) // 2


def f_prime_power(p: int, alpha: int) -> Fraction:
    """``f(p**alpha)`` through the remainder-sum formula, with no O(p**alpha) work."""
    n = p**alpha
    nu, r = nu_decomp(n)
    if nu == 0:
        rems = 0
    else:
        rems = prime_power_half_rem_sum(p, alpha)
        if r == 3:
            # 2*nu = (n - 3)/2 stops one short of n // 2
            rems -= ((n - 1) // 2) ** 2 % n
    return F_from_rem_sum(n, rems) - Fraction(n * n - 1, 12)
