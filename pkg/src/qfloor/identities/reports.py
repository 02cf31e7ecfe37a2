from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class DomainError(ValueError):
    """Parameters fall outside the domain an identity is stated for."""


class WidthError(ValueError):
    """A requested range would exceed the operation-count budget."""


def exact_str(q: Fraction | int) -> str:
    """``"num/den"`` form used in every machine-readable output."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def human_str(q: Fraction | int) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decimal_str(q: Fraction | int, places: int = 6) -> str:
    """Fixed-point rendering, round-half-even, computed exactly."""
    scaled = round(Fraction(q) * 10**places)  # Fraction.__round__ is half-even
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if not places:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@dataclass(frozen=True)
class IdentityReport:
    id: str
    params: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction
    passed: bool

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": list(self.params),
            "lhs": exact_str(self.lhs),
            "rhs": exact_str(self.rhs),
            "pass": self.passed,
        }


@dataclass
class SweepSummary:
    id: str
    domain: str
    max_n: int
    cases_checked: int
    counterexample_count: int = 0
    counterexamples: list[IdentityReport] = field(default_factory=list)
    wall_time: float = 0.0
    kind: str = "proven"
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.counterexample_count == 0

    def to_dict(self, include_time: bool = True) -> dict:
        out = {
            "id": self.id,
            "kind": self.kind,
            "domain": self.domain,
            "max_n": self.max_n,
            "cases_checked": self.cases_checked,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [r.to_dict() for r in self.counterexamples],
        }
        if self.note:
            out["note"] = self.note
        if include_time:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out
