from .registry import REGISTRY, TABLE_1, TABLE_2, Identity, UnknownIdentityError, check, get, ids
from .reports import (
    DomainError,
    IdentityReport,
    SweepSummary,
    WidthError,
    decimal_str,
    exact_str,
    human_str,
)
from .sweep import WIDTH_LIMIT, estimate_ops, sweep
from .trend import (
    CLASS_LIMITS,
    SeriesRow,
    TrendRow,
    conjecture_7_5_trend,
    f_series,
    figure1_series,
    residue_class_trend,
)

__all__ = [
    "CLASS_LIMITS",
    "DomainError",
    "Identity",
    "IdentityReport",
    "REGISTRY",
    "SeriesRow",
    "SweepSummary",
    "TABLE_1",
    "TABLE_2",
    "TrendRow",
    "UnknownIdentityError",
    "WIDTH_LIMIT",
    "WidthError",
    "check",
    "conjecture_7_5_trend",
    "decimal_str",
    "estimate_ops",
    "exact_str",
    "f_series",
    "figure1_series",
    "get",
    "human_str",
    "ids",
    "residue_class_trend",
    "sweep",
]
