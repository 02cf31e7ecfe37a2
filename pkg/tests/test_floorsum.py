import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qfloor.floorsum import (
    F_closed,
    F_direct,
    F_from_rem_sum,
    count_A_closed,
    count_A_direct,
    f_mod4_closed,
    f_of_n,
    f_prime_power,
    nu_decomp,
    prime_power_half_rem_sum,
    prime_power_rem_period_sum,
    rem_sq_period_sum,
    rem_sq_sum,
    s_of_n,
    s_of_n_direct,
)


def lattice_F(n):
    """Count lattice points (j, k), 1 <= j <= n/4, 1 <= k <= sqrt(j n), without isqrt."""
    total = 0
    for j in range(1, n // 4 + 1):
        k = 0
        while (k + 1) ** 2 <= j * n:
            k += 1
        total += k
    return total


@pytest.mark.parametrize("n, F", [(1, 0), (13, 14), (28, 68), (4, 2)])
def test_F_direct_examples(n, F):
    assert F_direct(n) == F


def test_F_direct_matches_lattice_count():
    for n in range(1, 300):
        assert F_direct(n) == lattice_F(n)


def test_F_direct_vector_path_matches_scalar():
    for n in (257, 4099, 65_537, 1_000_003):
        assert F_direct(n) == sum(math.isqrt(j * n) for j in range(1, n // 4 + 1))


def test_F_direct_rejects_nonpositive():
    with pytest.raises(ValueError):
        F_direct(0)


@pytest.mark.parametrize("n, f", [(5, 0), (7, -2), (2, Fraction(-1, 4)), (163, -41), (1, 0), (21, Fraction(-2, 3))])
def test_f_of_n_examples(n, f):
    assert f_of_n(n) == f


@pytest.mark.parametrize("n, k, s", [(13, 6, 39), (97, 0, 0), (4, 2, 1)])
def test_rem_sq_sum_examples(n, k, s):
    assert rem_sq_sum(n, k) == s


@settings(deadline=None)
@given(st.integers(1, 10**6), st.integers(0, 3000))
def test_rem_sq_sum_against_loop(n, k):
    assert rem_sq_sum(n, k) == sum(i * i % n for i in range(1, k + 1))


def test_rem_sq_sum_vector_path_near_int64_edge():
    n = 2**31 - 1
    assert rem_sq_sum(n, 70_000) == sum(i * i % n for i in range(1, 70_001))


def test_nu_decomp():
    assert tuple(nu_decomp(13)) == (3, 1)
    assert tuple(nu_decomp(28)) == (7, 0)


@pytest.mark.parametrize("n", [13, 28, 4, 1, 2, 3, 36, 100])
def test_F_closed_examples_match_oracle(n):
    assert F_closed(n) == F_direct(n)


def test_F_closed_matches_direct_up_to_2000():
    assert all(F_closed(n) == F_direct(n) for n in range(1, 2001))


@settings(max_examples=40, deadline=None)
@given(st.integers(2001, 200_000))
def test_F_closed_matches_direct_random(n):
    assert F_closed(n) == F_direct(n)


def test_F_from_rem_sum_flags_wrong_input():
    good = rem_sq_sum(29, 14)
    assert F_from_rem_sum(29, good + 1) != F_direct(29)


@pytest.mark.parametrize("n, f", [(4, Fraction(3, 4)), (16, Fraction(7, 4))])
def test_f_mod4_closed_examples(n, f):
    assert f_mod4_closed(n) == f


def test_f_mod4_closed_matches_oracle():
    for n in range(4, 3001, 4):
        assert f_mod4_closed(n) == f_of_n(n)


def test_f_mod4_closed_rejects_other_classes():
    with pytest.raises(ValueError):
        f_mod4_closed(6)


@pytest.mark.parametrize("n, a", [(12, 0), (36, 2), (3, 0), (9, 1), (1, 0), (2, 0), (163, 0)])
def test_count_A_examples(n, a):
    assert count_A_direct(n) == a
    assert count_A_closed(n) == a


def test_count_A_closed_matches_direct():
    assert all(count_A_closed(n) == count_A_direct(n) for n in range(1, 3001))


@pytest.mark.parametrize("n, s", [(21, Fraction(26, 3)), (2, Fraction(1, 2)), (13, 6)])
def test_s_of_n_examples(n, s):
    assert s_of_n(n) == s


def test_s_of_n_rejects_small():
    with pytest.raises(ValueError):
        s_of_n(1)


@settings(max_examples=60, deadline=None)
@given(st.integers(4096, 3_000_000))
def test_crt_period_sum_matches_direct(n):
    assert s_of_n(n) == s_of_n_direct(n)


def test_crt_period_sum_on_smooth_moduli():
    for n in (4096 * 3, 2**5 * 3**4 * 5**2, 7 * 11 * 13 * 17, 2 * 999_983):
        assert rem_sq_period_sum(n) == rem_sq_sum(n, n - 1)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_prime_power_period_recursion(p):
    alpha = 1
    while p**alpha <= 500_000:
        n = p**alpha
        assert prime_power_rem_period_sum(p, alpha) == rem_sq_sum(n, n - 1)
        assert prime_power_half_rem_sum(p, alpha) == rem_sq_sum(n, n // 2)
        alpha += 1


def test_f_prime_power_matches_oracle():
    for p in (2, 3, 5, 7, 11, 13, 17):
        alpha = 1
        while p**alpha <= 2_000_000:
            assert f_prime_power(p, alpha) == f_of_n(p**alpha), (p, alpha)
            alpha += 1


def test_f_prime_power_large_cells():
    assert f_prime_power(17, 8) == 20880
    assert f_prime_power(11, 7) == -4872192
    assert 3 * f_prime_power(3, 8) == 40
