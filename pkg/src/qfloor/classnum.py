"""Class numbers of imaginary quadratic fields.

The general route is Dirichlet's finite sum ``h = -w/(2|d|) * sum j (d/j)``.
The prime-specific sums for ``-4p`` and ``-p`` are evaluated separately
and cross-checked against it. Results are memoized per discriminant; the
memo can be seeded from and dumped to a cache file by the CLI.

Range sweeps need thousands of class numbers at once, so a second,
independent route tabulates them for every discriminant up to a bound by
counting reduced forms. :func:`class_number` and :func:`h_star` read the
table when it covers ``d`` and fall back to the Dirichlet sum otherwise.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import is_prime, is_squarefree
from .symbols import kronecker_character, legendre

# beyond this |d| the character table no longer fits comfortably in memory
MAX_ABS_DISCRIMINANT = 1 << 31

# largest table the sweeps may request (int32 entries, 128 MiB)
MAX_TABLE_LIMIT = 1 << 25

_memo: dict[int, int] = {}
_memo_lock = threading.Lock()
_table: np.ndarray | None = None


@dataclass(frozen=True)
class ClassNumberResult:
    h: int
    d: int
    w: int


def units(d: int) -> int:
    """Number of units in the ring of integers of the field of discriminant ``d < 0``."""
    return {-3: 6, -4: 4}.get(d, 2)


def is_fundamental_discriminant(d: int) -> bool:
    if d % 4 == 1:
        return is_squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def discriminant_of(n: int) -> int:
    """Discriminant of ``Q(sqrt(n))`` for a negative squarefree ``n``."""
    if n >= 0:
        raise ValueError(f"discriminant_of requires n < 0, got {n}")
    if not is_squarefree(n):
        raise ValueError(f"discriminant_of requires squarefree n, got {n}")
    return n if n % 4 == 1 else 4 * n


def _dirichlet_sum(d: int) -> int:
    n = abs(d)
    chi = kronecker_character(d)
    j = np.arange(n, dtype=np.int64)
    # chunked dot keeps int64 partial sums far from overflow
    total = 0
    for start in range(0, n, 1 << 22):
        stop = min(start + (1 << 22), n)
        total += int(np.dot(j[start:stop], chi[start:stop].astype(np.int64)))
    return total


def class_number_dirichlet(d: int) -> ClassNumberResult:
    if d >= 0 or not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a negative fundamental discriminant")
    if -d > MAX_ABS_DISCRIMINANT:
        raise ValueError(f"|d| = {-d} exceeds the supported bound {MAX_ABS_DISCRIMINANT}")
    w = units(d)
    h = _memo.get(d)
    if h is None:
        value = Fraction(-w * _dirichlet_sum(d), 2 * abs(d))
        if value.denominator != 1 or value <= 0:
            raise ArithmeticError(f"class number sum for d={d} gave {value}")
        h = int(value)
        with _memo_lock:
            _memo.setdefault(d, h)
    return ClassNumberResult(h, d, w)


def reduced_form_counts(limit: int) -> np.ndarray:
    """``t[D]`` = number of reduced forms ``(a, b, c)`` with ``b*b - 4*a*c = -D``, ``D <= limit``.

    Reduced means ``|b| <= a <= c`` with ``b >= 0`` whenever ``|b| = a`` or
    ``a = c``. For a fundamental discriminant every such form is primitive,
    so ``t[-d]`` is ``h(d)``. For fixed ``(a, b)`` the discriminants run
    through an arithmetic progression in ``c``, filled by one strided add.
    """
    counts = np.zeros(limit + 1, dtype=np.int32)
    a = 1
    while 3 * a * a <= limit:
        step = 4 * a
        for b in range(-a + 1, a + 1):
            start = step * (a if b >= 0 else a + 1) - b * b
            if start <= limit:
                counts[start::step] += 1
        a += 1
    return counts


def ensure_table(limit: int) -> int:
    """Tabulate class numbers for ``|d| <= limit``; returns the covered bound."""
    global _table
    limit = min(limit, MAX_TABLE_LIMIT)
    with _memo_lock:
        if _table is None or len(_table) <= limit:
            _table = reduced_form_counts(limit)
            _table.setflags(write=False)
        return len(_table) - 1


def table_limit() -> int:
    return 0 if _table is None else len(_table) - 1


def drop_table() -> None:
    global _table
    with _memo_lock:
        _table = None


def class_number_of_discriminant(d: int) -> int:
    """``h(d)`` for a negative fundamental discriminant, from the table when it covers ``d``."""
    table = _table
    if table is not None and -d < len(table):
        if d >= 0 or not is_fundamental_discriminant(d):
            raise ValueError(f"{d} is not a negative fundamental discriminant")
        return int(table[-d])
    return class_number_dirichlet(d).h


def class_number(n: int) -> int:
    """``h(n)`` for the field ``Q(sqrt(n))`` with ``n < 0`` squarefree."""
    return class_number_of_discriminant(discriminant_of(n))


def _require_prime(p: int, residue: int) -> None:
    if not is_prime(p) or p % 4 != residue:
        raise ValueError(f"expected a prime p = {residue} (mod 4), got {p}")


def h_4p_alternating_sum(p: int) -> Fraction:
    """``(1/2) * sum over odd j < 2p of (-1)**((j-1)/2) * (j/p)``."""
    return Fraction(
        sum((1 if j % 4 == 1 else -1) * legendre(j, p) for j in range(1, 2 * p, 2)), 2
    )


def h_4p_weighted_sum(p: int) -> Fraction:
    """``(1/(2p)) * sum over odd j < 2p of (-1)**((j-1)/2) * j * (j/p)``."""
    return Fraction(
        sum((1 if j % 4 == 1 else -1) * j * legendre(j, p) for j in range(1, 2 * p, 2)),
        2 * p,
    )


def legendre_moment(p: int) -> int:
    """``sum_{j=1}^{p-1} j * (j/p)``."""
    return sum(j * legendre(j, p) for j in range(1, p))


def h_p_jacobi_sum(p: int) -> Fraction:
    """``-(1/p) * sum_{j=1}^{p-1} j * (j/p)``."""
    return Fraction(-legendre_moment(p), p)


def h_neg_p_1mod4(p: int) -> int:
    _require_prime(p, 1)
    alt, weighted = h_4p_alternating_sum(p), h_4p_weighted_sum(p)
    h = class_number_dirichlet(-4 * p).h
    if not alt == weighted == h:
        raise ArithmeticError(f"class number routes disagree for p={p}: {alt}, {weighted}, {h}")
    return h


def h_neg_p_3mod4(p: int) -> int:
    _require_prime(p, 3)
    if p == 3:
        raise ValueError("p = 3 has six units; use h_star(3) instead")
    value = h_p_jacobi_sum(p)
    h = class_number_dirichlet(-p).h
    if value != h:
        raise ArithmeticError(f"class number routes disagree for p={p}: {value}, {h}")
    return h


def h_star(m: int) -> Fraction:
    """Class number of ``Q(sqrt(-m))`` normalized to two units: ``1/3`` at ``m = 3``.

    Defined for squarefree ``m = 3 (mod 4)``, composite ``m`` included.
    """
    if m < 1 or m % 4 != 3 or not is_squarefree(m):
        raise ValueError(f"h_star requires a squarefree m = 3 (mod 4), got {m}")
    if m == 3:
        return Fraction(1, 3)
    return Fraction(class_number_of_discriminant(-m))


def count_reduced_forms(d: int) -> int:
    """Number of reduced primitive positive definite forms of discriminant ``d``.

    Independent brute-force route to ``h(d)``, used as a test oracle.
    """
    count = 0
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if _gcd3(a, b, c) == 1:
                count += 1
        a += 1
    return count


def _gcd3(a: int, b: int, c: int) -> int:
    return math.gcd(math.gcd(a, abs(b)), c)


def memo_snapshot() -> dict[int, int]:
    with _memo_lock:
        return dict(_memo)


def memo_update(entries: dict[int, int]) -> None:
    with _memo_lock:
        for d, h in entries.items():
            _memo.setdefault(d, h)


def memo_clear() -> None:
    with _memo_lock:
        _memo.clear()
