from fractions import Fraction

import pytest

from qfloor import classnum
from qfloor.arith import primes_up_to
from qfloor.classnum import (
    class_number,
    class_number_dirichlet,
    count_reduced_forms,
    discriminant_of,
    h_4p_alternating_sum,
    h_4p_weighted_sum,
    h_neg_p_1mod4,
    h_neg_p_3mod4,
    h_p_jacobi_sum,
    h_star,
    is_fundamental_discriminant,
    units,
)

HEEGNER = [-3, -4, -7, -8, -11, -19, -43, -67, -163]


@pytest.mark.parametrize("n, d", [(-7, -7), (-5, -20), (-1, -4), (-2, -8), (-15, -15)])
def test_discriminant_of(n, d):
    assert discriminant_of(n) == d


@pytest.mark.parametrize("n", [0, 3, -4, -12])
def test_discriminant_of_rejects(n):
    with pytest.raises(ValueError):
        discriminant_of(n)


@pytest.mark.parametrize("d, h", [(-7, 1), (-23, 3), (-4, 1), (-3, 1), (-20, 2), (-47, 5), (-71, 7)])
def test_class_number_examples(d, h):
    assert class_number_dirichlet(d).h == h


def test_units():
    assert [units(d) for d in (-3, -4, -7, -8)] == [6, 4, 2, 2]


def test_heegner_discriminants_have_class_number_one():
    assert all(class_number_dirichlet(d).h == 1 for d in HEEGNER)
    others = [d for d in range(-3, -2000, -1) if is_fundamental_discriminant(d) and d not in HEEGNER]
    assert all(class_number_dirichlet(d).h > 1 for d in others)


def test_dirichlet_matches_reduced_form_count():
    for d in range(-3, -3000, -1):
        if is_fundamental_discriminant(d):
            assert class_number_dirichlet(d).h == count_reduced_forms(d), d


@pytest.mark.parametrize("d", [-1, 5, -12, -9, 0])
def test_class_number_rejects_nonfundamental(d):
    with pytest.raises(ValueError):
        class_number_dirichlet(d)


def test_class_number_of_field():
    assert class_number(-163) == 1
    assert class_number(-5) == 2
    assert class_number(-1) == 1


@pytest.mark.parametrize("p, h", [(5, 2), (13, 2), (17, 4)])
def test_h_neg_p_1mod4_examples(p, h):
    assert h_neg_p_1mod4(p) == h


@pytest.mark.parametrize("p, h", [(7, 1), (47, 5), (163, 1)])
def test_h_neg_p_3mod4_examples(p, h):
    assert h_neg_p_3mod4(p) == h


def test_h_neg_p_3mod4_rejects_three():
    with pytest.raises(ValueError):
        h_neg_p_3mod4(3)


def test_prime_specific_sums_agree_with_dirichlet():
    for p in map(int, primes_up_to(500)):
        if p % 4 == 1:
            h = class_number_dirichlet(-4 * p).h
            assert h_4p_alternating_sum(p) == h_4p_weighted_sum(p) == h
        elif p >= 7:
            assert h_p_jacobi_sum(p) == class_number_dirichlet(-p).h


@pytest.mark.parametrize("m, h", [(3, Fraction(1, 3)), (7, 1), (15, 2), (35, 2)])
def test_h_star(m, h):
    assert h_star(m) == h


@pytest.mark.parametrize("m", [1, 5, 27, 63])
def test_h_star_rejects(m):
    with pytest.raises(ValueError):
        h_star(m)


def test_memo_round_trip():
    class_number_dirichlet(-23)
    snap = classnum.memo_snapshot()
    assert snap[-23] == 3
    classnum.memo_clear()
    assert classnum.memo_snapshot() == {}
    classnum.memo_update(snap)
    assert classnum.memo_snapshot() == snap


def test_memo_hit_skips_evaluation(monkeypatch):
    classnum.memo_update({-31: 3})
    monkeypatch.setattr(classnum, "_dirichlet_sum", lambda d: pytest.fail("memo not used"))
    assert class_number_dirichlet(-31).h == 3


def test_form_table_agrees_with_dirichlet():
    table = classnum.reduced_form_counts(20_000)
    for d in range(-3, -20_001, -1):
        if is_fundamental_discriminant(d):
            assert table[-d] == class_number_dirichlet(d).h, d


def test_form_table_agrees_with_dirichlet_sampled_to_a_million():
    import random

    table = classnum.reduced_form_counts(10**6)
    rng = random.Random(7)
    picked = 0
    while picked < 150:
        d = -rng.randrange(20_000, 10**6)
        if is_fundamental_discriminant(d):
            assert table[-d] == class_number_dirichlet(d).h, d
            picked += 1


def test_lookup_prefers_table_and_validates():
    classnum.drop_table()
    classnum.ensure_table(1000)
    assert classnum.table_limit() == 1000
    assert classnum.class_number_of_discriminant(-23) == 3
    assert classnum.class_number_of_discriminant(-4 * 1997) == class_number_dirichlet(-4 * 1997).h
    with pytest.raises(ValueError):
        classnum.class_number_of_discriminant(-12)
    classnum.ensure_table(500)  # never shrinks
    assert classnum.table_limit() == 1000
    classnum.drop_table()
    assert classnum.table_limit() == 0
