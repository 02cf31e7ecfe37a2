"""Registry of exact identity checks.

Each entry evaluates a left-hand side by a definitional route and a
right-hand side by the stated closed form, both as exact rationals, and
knows how to enumerate its parameter domain up to a bound ``max_n``.
"""
from __future__ import annotations

import bisect
import inspect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Iterable

import numpy as np

from ..arith import (
    divisors,
    factorize,
    is_prime,
    is_squarefree,
    isqrt_array,
    moebius,
    primes_up_to,
    squarefree_decomp,
    squarefree_mask,
)
from ..classnum import class_number, h_neg_p_3mod4, h_star, legendre_moment
from ..floorsum import (
    F_closed,
    F_direct,
    F_from_rem_sum,
    count_A_closed,
    count_A_direct,
    f_mod4_closed,
    f_of_n,
    f_prime_power,
    prime_power_half_rem_sum,
    rem_sq_sum,
    s_of_n,
)
from ..symbols import legendre
from .reports import DomainError, IdentityReport

# prime powers above this are checked through the exact remainder recursion only
BRUTE_FORCE_LIMIT = 10**7

Params = tuple[int, ...]


class UnknownIdentityError(LookupError):
    pass


@dataclass(frozen=True)
class Identity:
    id: str
    kind: str
    statement: str
    domain: str
    evaluate: Callable[..., tuple[Fraction, Fraction]]
    cases: Callable[[int], Iterable[Params]]
    default_max: int
    cost: Callable[[int], float]
    # largest |d| whose class number a sweep up to max_n will ask for
    class_bound: Callable[[int], int] | None = None

    @cached_property
    def arity(self) -> int | None:
        """Number of parameters, or None when the entry takes a variable count."""
        params = inspect.signature(self.evaluate).parameters.values()
        if any(p.kind is p.VAR_POSITIONAL for p in params):
            return None
        return len(params)


REGISTRY: dict[str, Identity] = {}


def _register(id, *, statement, domain, cases, default_max, cost=None, kind="proven", classes=None):
    def deco(fn):
        REGISTRY[id] = Identity(
            id=id,
            kind=kind,
            statement=statement,
            domain=domain,
            evaluate=fn,
            cases=cases,
            default_max=default_max,
            cost=cost or (lambda m: float(m) ** 2),
            class_bound=classes,
        )
        return fn

    return deco


def check(id: str, params: Iterable[int]) -> IdentityReport:
    entry = get(id)
    params = tuple(int(x) for x in params)
    if entry.arity is not None and len(params) != entry.arity:
        raise DomainError(f"{id} takes {entry.arity} parameter(s), got {len(params)}")
    lhs, rhs = entry.evaluate(*params)
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return IdentityReport(id, params, lhs, rhs, lhs == rhs)


def get(id: str) -> Identity:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity id {id!r}") from None


# -- domain helpers ---------------------------------------------------------

_UP_TO_N = lambda m: m  # noqa: E731
_UP_TO_4N = lambda m: 4 * m  # noqa: E731


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def _need_prime(p: int, *, mod4: int | None = None, at_least: int = 2) -> None:
    _need(is_prime(p), f"p must be prime, got {p}")
    _need(p >= at_least, f"p must be >= {at_least}, got {p}")
    if mod4 is not None:
        _need(p % 4 == mod4, f"p must be {mod4} (mod 4), got {p}")


def _primes(max_n: int, *, mod4: int | None = None, at_least: int = 2) -> list[int]:
    return [
        int(p)
        for p in primes_up_to(max_n)
        if p >= at_least and (mod4 is None or p % 4 == mod4)
    ]


def _prime_cases(mod4=None, at_least=2):
    return lambda max_n: [(p,) for p in _primes(max_n, mod4=mod4, at_least=at_least)]


def _odd_squarefree(max_n: int, mod4: int | None = None) -> list[int]:
    mask = squarefree_mask(max_n)
    return [n for n in range(1, max_n + 1, 2) if mask[n] and (mod4 is None or n % 4 == mod4)]


def _only_1mod4_primes(n: int) -> bool:
    return n > 1 and all(p % 4 == 1 for p, _ in factorize(n))


@lru_cache(maxsize=None)
def _f(n: int) -> Fraction:
    return f_of_n(n)


def _geom(p: int, e: int) -> Fraction:
    """``(p**e - 1)/(p - 1)``."""
    return Fraction(p**e - 1, p - 1)


def _delta_4p(p: int) -> Fraction:
    """Coefficient of ``h(-p)`` in ``f(4p)``, by ``p`` mod 4 and mod 8."""
    if p % 4 == 1:
        return Fraction(1, 2)
    return Fraction(2) if p % 8 == 3 else Fraction(1)


def _eps(p: int) -> int:
    """0 for ``p = 3 (mod 8)``, 1 for ``p = 7 (mod 8)``."""
    return 0 if p % 8 == 3 else 1


def _is_3mod4(n: int) -> int:
    return 1 if n % 4 == 3 else 0


# -- classical floor sums -----------------------------------------------------


def _hermite_cases(max_n: int) -> list[Params]:
    b = min(max_n, 50)
    return [(a, q, n) for q in range(1, b + 1) for n in range(1, b + 1) for a in range(-q, 2 * q)]


@_register(
    "eq-1.1-hermite",
    statement="sum_{i<n} floor(x + i/n) = floor(n x) for x = a/q",
    domain="q, n <= min(max_n, 50), -q <= a < 2q",
    cases=_hermite_cases,
    default_max=50,
    cost=lambda m: min(m, 50) ** 4 * 3.0,
)
def _hermite(a, q, n):
    _need(q >= 1 and n >= 1, "q and n must be positive")
    lhs = sum((a * n + i * q) // (q * n) for i in range(n))
    return Fraction(lhs), Fraction((n * a) // q)


@_register(
    "eq-1.2-sqrtsum",
    statement="sum_{k=1}^{n-1} floor(sqrt k) = n a - a(a + 1/2)(a + 1)/3, a = floor(sqrt n)",
    domain="1 <= n <= max_n",
    cases=lambda m: [(n,) for n in range(1, m + 1)],
    default_max=10**4,
    cost=lambda m: m * m / 2.0,
)
def _sqrtsum(n):
    _need(n >= 1, "n must be positive")
    lhs = int(isqrt_array(np.arange(1, n, dtype=np.int64)).sum()) if n > 1 else 0
    a = math.isqrt(n)
    return Fraction(lhs), n * a - Fraction(a * (2 * a + 1) * (a + 1), 6)


# -- f at primes ---------------------------------------------------------------


@_register(
    "prop-1.1",
    statement="f(p) = 0 for primes p = 1 (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
    cost=lambda m: m * m / 16.0,
)
def _bunyakovsky(p):
    _need_prime(p, mod4=1)
    return _f(p), Fraction(0)


@_register(
    "prop-1.2",
    classes=_UP_TO_N,
    statement="f(p) = (1 - p - 2 h(-p))/4 for primes p = 3 (mod 4), p >= 7",
    domain="primes p = 3 (mod 4), 7 <= p <= max_n",
    cases=_prime_cases(mod4=3, at_least=7),
    default_max=2000,
    cost=lambda m: m * m / 8.0,
)
def _f_at_3mod4_prime(p):
    _need_prime(p, mod4=3, at_least=7)
    return _f(p), Fraction(1 - p - 2 * class_number(-p), 4)


# -- remainder-sum formula for F ----------------------------------------------------


@_register(
    "prop-2.1a",
    statement="F(n) equals the remainder-sum closed form, 4 does not divide n",
    domain="1 <= n <= max_n, n != 0 (mod 4)",
    cases=lambda m: [(n,) for n in range(1, m + 1) if n % 4],
    default_max=5000,
)
def _prop21a(n):
    _need(n >= 1 and n % 4 != 0, f"n must be positive and not divisible by 4, got {n}")
    return Fraction(F_direct(n)), F_from_rem_sum(n, rem_sq_sum(n, 2 * (n // 4)))


@_register(
    "prop-2.1b",
    statement="F(4 nu) equals the remainder-sum closed form",
    domain="4 <= n <= max_n, n = 0 (mod 4)",
    cases=lambda m: [(n,) for n in range(4, m + 1, 4)],
    default_max=5000,
)
def _prop21b(n):
    _need(n >= 4 and n % 4 == 0, f"n must be a positive multiple of 4, got {n}")
    return Fraction(F_direct(n)), F_from_rem_sum(n, rem_sq_sum(n, n // 2))


@_register(
    "cor-2.2",
    statement="f(n) = -n/8 + Qbar + (1/n) sum_{k<=n/2} Rem(k^2, n) for 4 | n",
    domain="4 <= n <= max_n, n = 0 (mod 4)",
    cases=lambda m: [(n,) for n in range(4, m + 1, 4)],
    default_max=5000,
)
def _cor22(n):
    _need(n >= 4 and n % 4 == 0, f"n must be a positive multiple of 4, got {n}")
    return _f(n), f_mod4_closed(n)


@_register(
    "lemma-2.2",
    statement="#{k <= 2 floor(n/4) - 1 : n | k^2} = (Q-1)/2 or Q-1",
    domain="1 <= n <= max_n",
    cases=lambda m: [(n,) for n in range(1, m + 1)],
    default_max=5000,
)
def _lemma22(n):
    _need(n >= 1, "n must be positive")
    return Fraction(count_A_direct(n)), Fraction(count_A_closed(n))


# -- quadratic residues mod p --------------------------------------------------------


@_register(
    "lemma-2.3",
    statement="sum_{k<=(p-1)/2} Rem(k^2, p) = p(p-1)/4 + (1/2) sum j (j/p)",
    domain="odd primes p <= max_n",
    cases=_prime_cases(at_least=3),
    default_max=2000,
    cost=lambda m: m * m / 4.0,
)
def _lemma23(p):
    _need_prime(p, at_least=3)
    return Fraction(rem_sq_sum(p, (p - 1) // 2)), Fraction(p * (p - 1), 4) + Fraction(
        legendre_moment(p), 2
    )


@_register(
    "eq-2.25",
    statement="sum_{j=1}^{p-1} j (j/p) = 0 for p = 1 (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
    cost=lambda m: m * m / 4.0,
)
def _eq225(p):
    _need_prime(p, mod4=1)
    return Fraction(legendre_moment(p)), Fraction(0)


@_register(
    "lemma-4.1",
    statement="sum_{k<n} Rem(k^2, 2n) = n(n-1)/2 + 2 sum_{k<=(n-1)/2} Rem(k^2, n), n odd",
    domain="odd 3 <= n <= max_n",
    cases=lambda m: [(n,) for n in range(3, m + 1, 2)],
    default_max=2001,
    cost=lambda m: m * m / 2.0,
)
def _lemma41(n):
    _need(n >= 3 and n % 2 == 1, f"n must be odd and >= 3, got {n}")
    return Fraction(rem_sq_sum(2 * n, n - 1)), Fraction(n * (n - 1), 2) + 2 * rem_sq_sum(
        n, (n - 1) // 2
    )


@_register(
    "lemma-5.2",
    statement="sum_{k<=(n-1)/2} Rem(k^2, n) = n(n - Q_n)/4 when every prime factor of n is 1 (mod 4)",
    domain="1 < n <= max_n with all prime factors = 1 (mod 4); remainders taken mod n",
    cases=lambda m: [(n,) for n in range(5, m + 1, 4) if _only_1mod4_primes(n)],
    default_max=2000,
)
def _lemma52(n):
    _need(_only_1mod4_primes(n), f"every prime factor of n must be 1 (mod 4), got {n}")
    q = squarefree_decomp(n).q_part
    return Fraction(rem_sq_sum(n, (n - 1) // 2)), Fraction(n * (n - q), 4)


@_register(
    "prop-5.1",
    statement="f(n) = (Q_n - 1)/4 and f(2n) = (Q_n - 1 - n)/4 when every prime factor of n is 1 (mod 4)",
    domain="params (n, m): n <= max_n with all prime factors = 1 (mod 4); m in {1, 2} selects f(m n)",
    cases=lambda mx: [
        (n, m) for n in range(5, mx + 1, 4) if _only_1mod4_primes(n) for m in (1, 2)
    ],
    default_max=2000,
)
def _prop51(n, m):
    _need(_only_1mod4_primes(n), f"every prime factor of n must be 1 (mod 4), got {n}")
    _need(m in (1, 2), f"m selects f(n) or f(2n) and must be 1 or 2, got {m}")
    q = squarefree_decomp(n).q_part
    rhs = Fraction(q - 1, 4) if m == 1 else Fraction(q - 1 - n, 4)
    return _f(m * n), rhs


# -- f(2p), f(4p) ------------------------------------------------------------


@_register(
    "prop-4.2",
    classes=_UP_TO_4N,
    statement="f(2p) = -p/4 + (1/2p) sum j (j/p); form 1: -p/4 or -p/4 - h(-p)/2",
    domain="params (p, form): odd primes p <= max_n; form 0 for p >= 3, form 1 for p >= 5",
    cases=lambda m: [(p, form) for p in _primes(m, at_least=3) for form in (0, 1) if p >= 3 + 2 * form],
    default_max=2000,
    cost=lambda m: m * m / 4.0,
)
def _prop42(p, form):
    _need(form in (0, 1), f"form must be 0 or 1, got {form}")
    _need_prime(p, at_least=3 + 2 * form)
    if form == 0:
        rhs = Fraction(-p, 4) + Fraction(legendre_moment(p), 2 * p)
    elif p % 4 == 1:
        rhs = Fraction(-p, 4)
    else:
        rhs = Fraction(-p, 4) - Fraction(class_number(-p), 2)
    return _f(2 * p), rhs


@_register(
    "prop-4.3",
    classes=_UP_TO_4N,
    statement="f(4p) = 1/4 + p/2 - delta(p) h(-p), delta = 1/2, 2, 1 for p = 1 (4), 3 (8), 7 (8)",
    domain="primes 5 <= p <= max_n",
    cases=_prime_cases(at_least=5),
    default_max=2000,
    cost=lambda m: m * m / 2.0,
)
def _prop43(p):
    _need_prime(p, at_least=5)
    return _f(4 * p), Fraction(1, 4) + Fraction(p, 2) - _delta_4p(p) * class_number(-p)


@_register(
    "lemma-4.4",
    classes=_UP_TO_4N,
    statement="h(-p) = (S_1 - S_3)/p, S_r = sum of residues j <= 2p-1, j = r (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
)
def _lemma44(p):
    _need_prime(p, mod4=1)
    s1 = sum(j for j in range(1, 2 * p, 4) if legendre(j, p) == 1)
    s3 = sum(j for j in range(3, 2 * p, 4) if legendre(j, p) == 1)
    return Fraction(class_number(-p)), Fraction(s1 - s3, p)


@_register(
    "lemma-4.5",
    classes=_UP_TO_4N,
    statement="h(-p) = (1/p) sum over odd k < p of (2p - Rem(k^2, 4p)), p = 1 (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
)
def _lemma45(p):
    _need_prime(p, mod4=1)
    total = sum(2 * p - k * k % (4 * p) for k in range(1, p, 2))
    return Fraction(class_number(-p)), Fraction(total, p)


@_register(
    "lemma-4.6",
    classes=_UP_TO_4N,
    statement="h(-p) = (1/p) sum_{k<p} (2p - Rem(k^2, 4p)), p = 1 (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
)
def _lemma46(p):
    _need_prime(p, mod4=1)
    return Fraction(class_number(-p)), Fraction(2 * p * (p - 1) - rem_sq_sum(4 * p, p - 1), p)


@_register(
    "lemma-4.7",
    classes=_UP_TO_N,
    statement="(1/2p) sum_{k<p} Rem(k^2, 4p) = p - 3/2 + (eps(p) - 2) h(-p), p = 3 (mod 4)",
    domain="primes p = 3 (mod 4), 7 <= p <= max_n",
    cases=_prime_cases(mod4=3, at_least=7),
    default_max=2000,
)
def _lemma47(p):
    _need_prime(p, mod4=3, at_least=7)
    lhs = Fraction(rem_sq_sum(4 * p, p - 1), 2 * p)
    return lhs, p - Fraction(3, 2) + (_eps(p) - 2) * class_number(-p)


@_register(
    "eq-4.11",
    classes=_UP_TO_N,
    statement="sum_{k<p} Rem(k^2, p) = p(p-1)/2 - p h*(-p), p = 3 (mod 4)",
    domain="primes p = 3 (mod 4), p <= max_n (p = 3 uses h*(-3) = 1/3)",
    cases=_prime_cases(mod4=3),
    default_max=2000,
)
def _eq411(p):
    _need_prime(p, mod4=3)
    return Fraction(rem_sq_sum(p, p - 1)), Fraction(p * (p - 1), 2) - p * h_star(p)


@_register(
    "eq-4.17",
    classes=_UP_TO_N,
    statement="#{quadratic residues in [1, p/4]} = (p-3)/8 + eps(p) h(-p)/2, p = 3 (mod 4)",
    domain="primes p = 3 (mod 4), 7 <= p <= max_n",
    cases=_prime_cases(mod4=3, at_least=7),
    default_max=2000,
)
def _eq417(p):
    _need_prime(p, mod4=3, at_least=7)
    count = sum(1 for j in range(1, p // 4 + 1) if legendre(j, p) == 1)
    return Fraction(count), Fraction(p - 3, 8) + Fraction(_eps(p) * class_number(-p), 2)


# -- prime powers ----------------------------------------------------------------


def _prime_power_f_closed(p: int, alpha: int) -> Fraction:
    """Closed form of ``f(p**alpha)`` split on p = 2, 1 (mod 4), 3 (mod 4)."""
    beta, odd = divmod(alpha, 2)
    if p == 2:
        if odd:
            return Fraction(2) ** (2 * beta - 2) - Fraction(2) ** (beta - 1) + Fraction(3, 4)
        return Fraction(2) ** (2 * beta - 3) - Fraction(2) ** (beta - 2) + Fraction(3, 4)
    if p % 4 == 1:
        return Fraction(p**beta - 1, 4)
    hs = h_star(p)
    if odd:
        return Fraction(-1, 4) * (p ** (beta + 1) - 1) * (p**beta + Fraction(2, p - 1) * hs)
    return Fraction(p**beta - 1, 4) * (1 - Fraction(2, p - 1) * hs)


def _need_prime_power(p: int, alpha: int) -> None:
    _need(is_prime(p), f"p must be prime, got {p}")
    _need(alpha >= (2 if p == 2 else 1), f"alpha must be >= {2 if p == 2 else 1} for p = {p}, got {alpha}")


def _prime_power_cases(pred=lambda p: True, top_alpha: int = 8):
    def cases(max_n: int) -> list[Params]:
        return [
            (p, a)
            for p in _primes(max_n)
            if pred(p)
            for a in range(2 if p == 2 else 1, top_alpha + 1)
        ]

    return cases


def _prop61(p, alpha):
    _need_prime_power(p, alpha)
    n = p**alpha
    lhs = _f(n) if n <= BRUTE_FORCE_LIMIT else f_prime_power(p, alpha)
    return lhs, _prime_power_f_closed(p, alpha)


_PROP61_DOMAIN = (
    "params (p, alpha): primes p <= max_n, alpha <= 8 (alpha >= 2 for p = 2); "
    "brute-force f when p^alpha <= 1e7, exact remainder recursion above"
)
_prop61_cost = lambda m: 2.0e7 * len(_primes(min(m, 10**5)))  # noqa: E731
for _sub, _pred, _text in (
    ("prop-6.1", lambda p: True, "f(p^alpha) closed forms for p = 2, 1 (mod 4), 3 (mod 4)"),
    ("prop-6.1a", lambda p: p == 2, "f(2^alpha) = 2^(2b-3) - 2^(b-2) + 3/4 (alpha = 2b), 2^(2b-2) - 2^(b-1) + 3/4 (alpha = 2b+1)"),
    ("prop-6.1b", lambda p: p % 4 == 1, "f(p^(2b)) = f(p^(2b+1)) = (p^b - 1)/4 for p = 1 (mod 4)"),
    ("prop-6.1c", lambda p: p % 4 == 3, "f(p^alpha) in terms of h*(-p) for p = 3 (mod 4)"),
):

    def _make(pred, sub):
        def evaluate(p, alpha):
            _need(pred(p), f"p = {p} is outside the domain of {sub}")
            return _prop61(p, alpha)

        return evaluate

    _register(
        _sub,
        classes=_UP_TO_N,
        statement=_text,
        domain=_PROP61_DOMAIN,
        cases=_prime_power_cases(_pred),
        default_max=2000,
        cost=_prop61_cost,
    )(_make(_pred, _sub))


def _half_rem_closed(p: int, alpha: int) -> Fraction:
    beta, odd = divmod(alpha, 2)
    if p == 2:
        if odd:
            return Fraction(2) ** (2 * beta - 1) * (2 ** (2 * beta + 1) - 4 * 2**beta + 3)
        return Fraction(2) ** (2 * beta - 2) * (2 ** (2 * beta) - 3 * 2**beta + 3)
    if p % 4 == 1:
        if odd:
            return Fraction(p ** (3 * beta + 1) * (p ** (beta + 1) - 1), 4)
        return Fraction(p ** (3 * beta) * (p**beta - 1), 4)
    tail = p**beta - Fraction(2, p - 1) * h_star(p)
    if odd:
        return Fraction(p ** (2 * beta + 1) * (p ** (beta + 1) - 1), 4) * tail
    return Fraction(p ** (2 * beta) * (p**beta - 1), 4) * tail


@_register(
    "lemma-6.2",
    classes=_UP_TO_N,
    statement="closed forms of sum_{k <= p^alpha/2} Rem(k^2, p^alpha)",
    domain=_PROP61_DOMAIN.replace("brute-force f", "direct remainder sum"),
    cases=_prime_power_cases(),
    default_max=2000,
    cost=_prop61_cost,
)
def _lemma62(p, alpha):
    _need_prime_power(p, alpha)
    n = p**alpha
    if n <= BRUTE_FORCE_LIMIT:
        lhs = rem_sq_sum(n, n // 2)
    else:
        lhs = prime_power_half_rem_sum(p, alpha)
    return Fraction(lhs), _half_rem_closed(p, alpha)


def _lemma63a(p, alpha, k):
    _need(is_prime(p) and alpha >= 1 and k >= 1, "need p prime, alpha >= 1, k >= 1")
    return Fraction((k * p) ** 2 % p ** (alpha + 2)), Fraction(p * p * (k * k % p**alpha))


def _lemma63b(p, alpha, r):
    _need(is_prime(p) and p > 2, f"p must be an odd prime, got {p}")
    _need(alpha >= 0 and 1 <= r <= p - 1, "need alpha >= 0 and 1 <= r <= p-1")
    mod = p ** (alpha + 2)
    distinct = len({(j * p + r) ** 2 % mod for j in range(p ** (alpha + 1))})
    return Fraction(distinct), Fraction(p ** (alpha + 1))


def _lemma63c(alpha, k):
    _need(alpha >= 2 and 0 <= k <= 2 ** (alpha - 1), "need alpha >= 2 and 0 <= k <= 2^(alpha-1)")
    mod = 2**alpha
    return Fraction((2 ** (alpha - 1) - k) ** 2 % mod), Fraction(k * k % mod)


def _lemma63d(ell, alpha):
    _need(ell >= 0 and alpha >= 1, "need ell >= 0 and alpha >= 1")
    return Fraction((2 * ell + 1) ** 2 % 2 ** (alpha + 2) % 8), Fraction(1)


def _cases63a(max_n):
    return [(p, a, k) for p in (2, 3, 5, 7) for a in range(1, 5) for k in range(1, min(max_n, 200) + 1)]


def _cases63b(max_n):
    return [(p, a, r) for p in (3, 5, 7) for a in range(0, 3) for r in range(1, p)]


def _cases63c(max_n):
    return [(a, k) for a in range(2, 13) for k in range(0, 2 ** (a - 1) + 1)]


def _cases63d(max_n):
    return [(ell, a) for a in range(1, 13) for ell in range(0, 2 ** (a + 1))]


_LEMMA63 = {
    1: ("lemma-6.3a", _lemma63a, _cases63a, "Rem((kp)^2, p^(alpha+2)) = p^2 Rem(k^2, p^alpha)",
        "p in {2,3,5,7}, alpha <= 4, k <= min(max_n, 200)"),
    2: ("lemma-6.3b", _lemma63b, _cases63b, "the p^(alpha+1) remainders Rem((jp+r)^2, p^(alpha+2)) are distinct",
        "p in {3,5,7}, alpha <= 2, 1 <= r <= p-1; lhs counts distinct values"),
    3: ("lemma-6.3c", _lemma63c, _cases63c, "Rem((2^(alpha-1) - k)^2, 2^alpha) = Rem(k^2, 2^alpha)",
        "2 <= alpha <= 12, 0 <= k <= 2^(alpha-1)"),
    4: ("lemma-6.3d", _lemma63d, _cases63d, "Rem((2l+1)^2, 2^(alpha+2)) = 1 (mod 8)",
        "1 <= alpha <= 12, l over a full period"),
}
for _part, (_id, _fn, _cases, _text, _dom) in _LEMMA63.items():
    _register(_id, statement=_text, domain=_dom, cases=_cases, default_max=200, cost=lambda m: 1e6)(_fn)


@_register(
    "lemma-6.3",
    statement="all four remainder facts for prime powers; first parameter selects part 1-4 (a-d)",
    domain="(part, *params) with part 1..4, each part on its own domain",
    cases=lambda m: [(part, *c) for part, spec in _LEMMA63.items() for c in spec[2](m)],
    default_max=200,
    cost=lambda m: 4e6,
)
def _lemma63(part, *rest):
    _need(part in _LEMMA63, f"part must be 1..4, got {part}")
    report = check(_LEMMA63[part][0], rest)
    return report.lhs, report.rhs


@_register(
    "eq-6.11a",
    statement="Rem(((p^(2b+1) - 1)/2)^2, p^(2b+1)) = (p^(2b+1) + 1)/4 for p = 3 (mod 4)",
    domain="params (p, b): primes p = 3 (mod 4), p <= max_n, 0 <= b <= 4",
    cases=lambda m: [(p, b) for p in _primes(m, mod4=3) for b in range(5)],
    default_max=2000,
    cost=lambda m: float(m),
)
def _eq611a(p, beta):
    _need_prime(p, mod4=3)
    _need(beta >= 0, f"b must be >= 0, got {beta}")
    n = p ** (2 * beta + 1)
    return Fraction(((n - 1) // 2) ** 2 % n), Fraction(n + 1, 4)


@_register(
    "eq-6.18a",
    statement="sum_{k<=(p-1)/2} Rem(k^2, p) = p(p-1)/4 for p = 1 (mod 4)",
    domain="primes p = 1 (mod 4), p <= max_n",
    cases=_prime_cases(mod4=1),
    default_max=2000,
)
def _eq618a(p):
    _need_prime(p, mod4=1)
    return Fraction(rem_sq_sum(p, (p - 1) // 2)), Fraction(p * (p - 1), 4)


# -- conjectures --------------------------------------------------------------


def _two_prime_power_cases(p_class: int, q_class: int):
    """All ``(p, q, a, b)`` with ``p^a q^b <= max_n`` in lexicographic order.

    ``p = p_class``, ``q = q_class (mod 4)``; when both classes agree only
    ``p < q`` is listed.
    """

    def cases(max_n: int) -> list[Params]:
        primes = _primes(max(max_n // 3, 2), at_least=3)
        ps = [p for p in primes if p % 4 == p_class]
        qs = [q for q in primes if q % 4 == q_class]
        out = []
        for p in ps:
            lo = bisect.bisect_right(qs, p) if p_class == q_class else 0
            if lo >= len(qs) or p * qs[lo] > max_n:
                continue
            for q in qs[lo:]:
                if p * q > max_n:
                    break
                pa, a = p, 1
                while pa * q <= max_n:
                    qb, b = q, 1
                    while pa * qb <= max_n:
                        out.append((p, q, a, b))
                        qb, b = qb * q, b + 1
                    pa, a = pa * p, a + 1
        return out

    return cases


def _conj71_rhs(p, q, a, b, pq_sign):
    n = p**a * q**b
    inner = (_geom(p, (a + 2) // 2) - _geom(p, a // 2) * legendre(p, q)) * h_star(q)
    inner += pq_sign * _geom(p, (a + 1) // 2) * h_star(p * q)
    return Fraction(n - p ** (a // 2) * q ** (b // 2), 2) - _geom(q, (b + 1) // 2) * inner


def _need_conj71(p, q, a, b):
    _need_prime(p, mod4=1)
    _need(is_prime(q) and q % 4 == 3, f"q must be a prime = 3 (mod 4), got {q}")
    _need(a >= 1 and b >= 1, "exponents must be >= 1")


_CONJ71_CASES = _two_prime_power_cases(1, 3)


@_register(
    "conj-7.1",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="S_n for n = p^a q^b, p = 1, q = 3 (mod 4); the h*(-pq) term enters with a + sign",
    domain="params (p, q, a, b): p = 1, q = 3 (mod 4) primes, a, b >= 1, p^a q^b <= max_n",
    cases=_CONJ71_CASES,
    default_max=10**4,
    cost=lambda m: 40.0 * m,
)
def _conj71(p, q, a, b):
    _need_conj71(p, q, a, b)
    return s_of_n(p**a * q**b), _conj71_rhs(p, q, a, b, +1)


@_register(
    "conj-7.1-printed",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="S_n for n = p^a q^b with the h*(-pq) term subtracted; sign-flipped variant of conj-7.1, refuted",
    domain="params (p, q, a, b): p = 1, q = 3 (mod 4) primes, a, b >= 1, p^a q^b <= max_n",
    cases=_CONJ71_CASES,
    default_max=10**4,
    cost=lambda m: 40.0 * m,
)
def _conj71_printed(p, q, a, b):
    _need_conj71(p, q, a, b)
    return s_of_n(p**a * q**b), _conj71_rhs(p, q, a, b, -1)


def _need_two_3mod4(p, q):
    for x in (p, q):
        _need(is_prime(x) and x % 4 == 3, f"expected a prime = 3 (mod 4), got {x}")
    _need(p != q, "p and q must be distinct")


@_register(
    "conj-7.2",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="S_n for n = p^a q^b with p = q = 3 (mod 4) distinct primes",
    domain="params (p, q, a, b): p < q primes = 3 (mod 4), a, b >= 1, p^a q^b <= max_n",
    cases=_two_prime_power_cases(3, 3),
    default_max=10**4,
    cost=lambda m: 40.0 * m,
)
def _conj72(p, q, a, b):
    _need_two_3mod4(p, q)
    _need(a >= 1 and b >= 1, "exponents must be >= 1")
    n = p**a * q**b
    rhs = (
        Fraction(n - p ** (a // 2) * q ** (b // 2), 2)
        - (_geom(q, b // 2) * legendre(p, q) + _geom(q, b // 2 + 1)) * _geom(p, (a + 1) // 2) * h_star(p)
        - (_geom(p, a // 2) * legendre(q, p) + _geom(p, a // 2 + 1)) * _geom(q, (b + 1) // 2) * h_star(q)
    )
    return s_of_n(n), rhs


def _pair_cases(max_n):
    primes = _primes(max(max_n // 3, 2), mod4=3)
    return [(p, q) for i, p in enumerate(primes) for q in primes[i + 1 :] if p * q <= max_n]


@_register(
    "eq-7.3",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="S_pq = (pq - 1)/2 - h*(-p) - h*(-q) for distinct p = q = 3 (mod 4)",
    domain="params (p, q): primes p < q, both = 3 (mod 4), pq <= max_n",
    cases=_pair_cases,
    default_max=10**5,
    cost=lambda m: 10.0 * m,
)
def _eq73(p, q):
    _need_two_3mod4(p, q)
    return s_of_n(p * q), Fraction(p * q - 1, 2) - h_star(p) - h_star(q)


@_register(
    "eq-7.4",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="f(pq) = -(h*(-p) + h*(-q))/2 for distinct p = q = 3 (mod 4)",
    domain="params (p, q): primes p < q, both = 3 (mod 4), pq <= max_n",
    cases=_pair_cases,
    default_max=10**4,
    cost=lambda m: m * m / 8.0,
)
def _eq74(p, q):
    _need_two_3mod4(p, q)
    return _f(p * q), -(h_star(p) + h_star(q)) / 2


def _need_odd_squarefree(n, mod4=None):
    _need(n >= 1 and n % 2 == 1 and is_squarefree(n), f"n must be odd and squarefree, got {n}")
    if mod4 is not None:
        _need(n % 4 == mod4, f"n must be {mod4} (mod 4), got {n}")


def _hstar_divisor_sum(n: int) -> Fraction:
    return sum((h_star(d) for d in divisors(n) if d % 4 == 3), Fraction(0))


@_register(
    "conj-7.3a",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="f(n) = -(1/2) sum_{d | n, d = 3 (mod 4)} h*(-d) for odd squarefree n = 1 (mod 4)",
    domain="odd squarefree n = 1 (mod 4), n <= max_n",
    cases=lambda m: [(n,) for n in _odd_squarefree(m, 1)],
    default_max=10**4,
    cost=lambda m: m * m / 16.0,
)
def _conj73a(n):
    _need_odd_squarefree(n, 1)
    return _f(n), -_hstar_divisor_sum(n) / 2


@_register(
    "conj-7.3b",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="f(n) = (1-n)/4 - (1/2) sum_{d | n, d = 3 (mod 4)} h*(-d) for odd squarefree n = 3 (mod 4)",
    domain="odd squarefree n = 3 (mod 4), n <= max_n",
    cases=lambda m: [(n,) for n in _odd_squarefree(m, 3)],
    default_max=10**4,
    cost=lambda m: m * m / 16.0,
)
def _conj73b(n):
    _need_odd_squarefree(n, 3)
    return _f(n), Fraction(1 - n, 4) - _hstar_divisor_sum(n) / 2


@_register(
    "conj-7.4",
    classes=_UP_TO_N,
    kind="conjecture",
    statement="h*(-n) delta(n) = sum_{d | n} mu(n/d) ((1-d)/2 delta(d) - 2 f(d)), delta = [n = 3 (mod 4)]",
    domain="odd squarefree n <= max_n",
    cases=lambda m: [(n,) for n in _odd_squarefree(m)],
    default_max=10**4,
    cost=lambda m: m * m / 8.0,
)
def _conj74(n):
    _need_odd_squarefree(n)
    lhs = h_star(n) if n % 4 == 3 else Fraction(0)
    rhs = sum(
        (moebius(n // d) * (Fraction(1 - d, 2) * _is_3mod4(d) - 2 * _f(d)) for d in divisors(n)),
        Fraction(0),
    )
    return lhs, rhs


# -- tables ------------------------------------------------------------------------

# p -> (f(p), -p-1-4f(p), h(-p))
TABLE_1 = {
    7: (-2, 0, 1), 11: (-3, 0, 1), 19: (-5, 0, 1), 23: (-7, 4, 3),
    31: (-9, 4, 3), 43: (-11, 0, 1), 47: (-14, 8, 5), 59: (-16, 4, 3),
    67: (-17, 0, 1), 71: (-21, 12, 7), 79: (-22, 8, 5), 83: (-22, 4, 3),
}

# p -> [scale * f(p^alpha) for alpha = 1..8]; scale is 4 for p = 2, 3 for p = 3
TABLE_2 = {
    2: [-1, 3, 3, 7, 11, 27, 51, 115],
    3: [-2, 1, -20, 4, -182, 13, -1640, 40],
    5: [0, 1, 1, 6, 6, 31, 31, 156],
    7: [-2, 1, -88, 8, -4218, 57, -206000, 400],
    11: [-3, 2, -336, 24, -40299, 266, -4872192, 2928],
    13: [0, 3, 3, 42, 42, 549, 549, 7140],
    17: [0, 4, 4, 72, 72, 1228, 1228, 20880],
}
TABLE_2_SCALE = {2: 4, 3: 3}


@_register(
    "table-1",
    kind="table",
    statement="f(p), -p-1-4f(p) and h(-p) for the twelve primes p = 3 (mod 4), 7 <= p < 100",
    domain="params (p, column): the 12 tabulated primes, column 0..2",
    cases=lambda m: [(p, c) for p in TABLE_1 for c in range(3)],
    default_max=100,
    cost=lambda m: 1e5,
)
def _table1(p, column):
    _need(p in TABLE_1, f"p = {p} is not a row of the table")
    _need(column in (0, 1, 2), f"column must be 0, 1 or 2, got {column}")
    if column == 0:
        value = _f(p)
    elif column == 1:
        value = -p - 1 - 4 * _f(p)
    else:
        value = Fraction(h_neg_p_3mod4(p))
    return value, Fraction(TABLE_1[p][column])


def _table2_cases(max_n):
    closed = [(p, a, 0) for p in TABLE_2 for a in range(1, 9)]
    brute = [(p, a, 1) for p in TABLE_2 for a in range(1, 9) if p**a <= BRUTE_FORCE_LIMIT]
    return closed + brute


@_register(
    "table-2",
    kind="table",
    statement="scaled f(p^alpha) for p <= 17, alpha <= 8",
    domain="params (p, alpha, route): route 0 closed form, route 1 brute force (p^alpha <= 1e7)",
    cases=_table2_cases,
    default_max=17,
    cost=lambda m: 1e8,
)
def _table2(p, alpha, route):
    _need(p in TABLE_2 and 1 <= alpha <= 8, f"({p}, {alpha}) is not a cell of the table")
    _need(route in (0, 1), f"route must be 0 (closed form) or 1 (brute force), got {route}")
    n = p**alpha
    if route == 1:
        _need(n <= BRUTE_FORCE_LIMIT, f"brute force is limited to p^alpha <= {BRUTE_FORCE_LIMIT}")
        value = _f(n)
    elif (p, alpha) == (2, 1):
        # the prime-power closed forms start at 4; use the remainder-sum form of F
        value = F_closed(2) - Fraction(3, 12)
    else:
        value = _prime_power_f_closed(p, alpha)
    return TABLE_2_SCALE.get(p, 1) * value, Fraction(TABLE_2[p][alpha - 1])


def ids() -> list[str]:
    return list(REGISTRY)


__all__ = [
    "BRUTE_FORCE_LIMIT",
    "REGISTRY",
    "TABLE_1",
    "TABLE_2",
    "Identity",
    "UnknownIdentityError",
    "check",
    "get",
    "ids",
]
