"""Long-range behaviour of ``f(n)/n`` and the raw series behind it."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from ..floorsum import f_of_n
from .reports import decimal_str

# conjectured limits of f(m)/m along each residue class mod 4
CLASS_LIMITS = {0: 0.125, 1: 0.0, 2: -0.125, 3: -0.25}
MIN_TREND_N = 4000


class TrendRow(NamedTuple):
    residue: int
    mean_ratio: float
    target: float
    deviation: float
    count: int


def residue_class_trend(max_n: int) -> list[TrendRow]:
    """Mean of ``f(m)/m`` over the top tenth ``[max_n - max_n//10, max_n]`` of each class mod 4."""
    if max_n < MIN_TREND_N:
        raise ValueError(f"max_n must be >= {MIN_TREND_N}, got {max_n}")
    lo = max_n - max_n // 10
    rows = []
    for r, target in CLASS_LIMITS.items():
        ratios = [float(f_of_n(m) / m) for m in range(lo, max_n + 1) if m % 4 == r]
        mean = math.fsum(ratios) / len(ratios)
        rows.append(TrendRow(r, mean, target, mean - target, len(ratios)))
    return rows


conjecture_7_5_trend = residue_class_trend


class SeriesRow(NamedTuple):
    n: int
    f: Fraction
    ratio: str


def f_series(max_n: int) -> list[SeriesRow]:
    """``(n, f(n), f(n)/n to six decimals)`` for ``1 <= n <= max_n``."""
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        value = f_of_n(n)
        rows.append(SeriesRow(n, value, decimal_str(value / n, 6)))
    return rows


figure1_series = f_series
