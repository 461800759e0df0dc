"""Derived metrics of contact numbers and the asymptotic interval check."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable

ASYMPTOTIC_LOWER = 0.926
ASYMPTOTIC_UPPER = 7.862
ASYMPTOTIC_NOTE = "asymptotic reference - valid for n -> infinity, not a constraint at finite n"

TSV_HEADER = "n\tc\tc_minus_3n\tratio\tratio_full"


def _check(n: int, c: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 0 <= c <= 6 * n:
        raise ValueError(f"contact count {c} impossible for {n} balls (must be 0..{6 * n})")


def _ratio(n: int, c: int) -> float:
    # n**(2/3) computed via the integer cube root when exact (27 -> 9)
    root = round(n ** (1.0 / 3.0))
    if root**3 == n:
        return (6 * n - c) / (root * root)
    return (6 * n - c) / n ** (2.0 / 3.0)


@dataclass(frozen=True)
class ReportRow:
    n: int
    c: int
    excess: int
    ratio: float

    @property
    def ratio_display(self) -> str:
        return str(Decimal(repr(self.ratio)).quantize(Decimal("0.1"), rounding=ROUND_HALF_UP))

    def tsv(self) -> str:
        return f"{self.n}\t{self.c}\t{self.excess}\t{self.ratio_display}\t{self.ratio!r}"


def metrics_row(n: int, c: int) -> ReportRow:
    _check(n, c)
    return ReportRow(n, c, c - 3 * n, _ratio(n, c))


@dataclass(frozen=True)
class BoundCheck:
    ratio: float
    relation: str
    lower: float = ASYMPTOTIC_LOWER
    upper: float = ASYMPTOTIC_UPPER
    note: str = ASYMPTOTIC_NOTE


def bound_check(n: int, c: int) -> BoundCheck:
    ratio = metrics_row(n, c).ratio
    if ratio <= ASYMPTOTIC_LOWER:
        relation = "below"
    elif ratio >= ASYMPTOTIC_UPPER:
        relation = "above"
    else:
        relation = "inside"
    return BoundCheck(ratio, relation)


def summary_table(rows: Iterable[tuple[int, int]]) -> str:
    lines = [TSV_HEADER]
    lines.extend(metrics_row(n, c).tsv() for n, c in rows)
    return "\n".join(lines) + "\n"
