"""Structured results of identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from .series import Series
from .trees import Monomial, canonical_sorted, deg_x, encode


@dataclass(frozen=True)
class Mismatch:
    monomial: Monomial
    lhs: Fraction
    rhs: Fraction

    def __str__(self):
        return f"{encode(self.monomial)}: lhs {self.lhs} != rhs {self.rhs}"


@dataclass
class Report:
    name: str
    passed: bool
    precision: int
    mismatch: Optional[Mismatch] = None
    # set when the inputs failed a stated precondition; nothing else was checked
    precondition: Optional[str] = None
    rows: List[dict] = field(default_factory=list)
    note: str = ""

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name} (precision {self.precision})"
        if self.precondition:
            line += f": precondition failed: {self.precondition}"
        elif self.mismatch is not None:
            line += f": first mismatch at {self.mismatch}"
        if self.note:
            line += f" [{self.note}]"
        return line


def first_mismatch(lhs: Series, rhs: Series, precision: Optional[int] = None) -> Optional[Mismatch]:
    p = min(lhs.precision, rhs.precision)
    if precision is not None:
        p = min(p, precision)
    keys = {s for s, _ in lhs.items() if deg_x(s) <= p} | {s for s, _ in rhs.items() if deg_x(s) <= p}
    for s in canonical_sorted(keys):
        a = lhs.coefficient(s)
        b = rhs.coefficient(s)
        if a != b:
            return Mismatch(s, a, b)
    return None


def compare(name: str, lhs: Series, rhs: Series, precision: Optional[int] = None, note: str = "") -> Report:
    """Coefficientwise comparison to the shared precision."""
    p = min(lhs.precision, rhs.precision)
    if precision is not None:
        p = min(p, precision)
    bad = first_mismatch(lhs, rhs, p)
    return Report(name=name, passed=bad is None, precision=p, mismatch=bad, note=note)


def combine(name: str, reports: List[Report], precision: int) -> Report:
    """A report that passes iff every sub-report passes; keeps the first failure."""
    p = precision
    for r in reports:
        if not r.passed:
            return Report(name, False, p, r.mismatch, r.precondition, note=r.name)
    return Report(name, True, p)
