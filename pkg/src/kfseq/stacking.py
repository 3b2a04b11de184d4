"""Cutting-stacking columns C_n = {L_n, S_n} for the golden partitions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import check_level
from .golden import ALPHA, ONE, ZERO, GoldenNumber, alpha_pow
from .iet import apply_T, branch_params, locate_branch

Interval = tuple[GoldenNumber, GoldenNumber]


@dataclass(frozen=True)
class Column:
    """Stack of equal-width half-open intervals, listed bottom to top."""

    intervals: tuple[Interval, ...]

    @property
    def height(self) -> int:
        return len(self.intervals)

    @property
    def width(self) -> GoldenNumber:
        u, v = self.intervals[0]
        return v - u

    @property
    def bottom(self) -> Interval:
        return self.intervals[0]

    @property
    def top(self) -> Interval:
        return self.intervals[-1]

    def lefts(self) -> list[GoldenNumber]:
        return [u for u, _ in self.intervals]

    def cut(self, offset: GoldenNumber) -> tuple[Column, Column]:
        """Split vertically at ``offset`` from each left endpoint."""
        low = tuple((u, u + offset) for u, _ in self.intervals)
        high = tuple((u + offset, v) for u, v in self.intervals)
        return Column(low), Column(high)

    def stack(self, other: Column) -> Column:
        """``self * other``: put ``other`` on top of ``self``."""
        return Column(self.intervals + other.intervals)


@dataclass(frozen=True)
class ColumnPair:
    n: int
    L: Column
    S: Column

    def intervals(self) -> list[Interval]:
        return list(self.L.intervals) + list(self.S.intervals)

    def check_invariants(self) -> None:
        from .partition import counts

        w_long, w_short = alpha_pow(self.n), alpha_pow(self.n + 1)
        for col, w in ((self.L, w_long), (self.S, w_short)):
            for u, v in col.intervals:
                if v - u != w:
                    raise AssertionError(f"interval [{u}, {v}) has width != {w}")
        c = counts(self.n)
        if (self.L.height, self.S.height) != (c.long, c.short):
            raise AssertionError("column heights do not match (l_n, s_n)")


def initial_columns() -> ColumnPair:
    """C_1: L_1 = [0, alpha), S_1 = [alpha, 1)."""
    return ColumnPair(1, Column(((ZERO, ALPHA),)), Column(((ALPHA, ONE),)))


def advance(c: ColumnPair) -> ColumnPair:
    """L_{n+1} = L_n^0 * S_n and S_{n+1} = L_n^1, cutting L_n at width alpha^(n+1)."""
    low, high = c.L.cut(alpha_pow(c.n + 1))
    return ColumnPair(c.n + 1, low.stack(c.S), high)


def columns(n: int, cap: Optional[int] = None) -> ColumnPair:
    if n < 1:
        raise ValueError("column level must be >= 1")
    check_level(n, cap)
    c = initial_columns()
    for _ in range(n - 1):
        c = advance(c)
    return c


@dataclass(frozen=True)
class CertificationReport:
    level: int
    ok: bool
    checked: int
    column: Optional[str] = None
    index: Optional[int] = None
    detail: Optional[str] = None


def _translate(J: Interval):
    """T(J) when J lies inside a single branch, else None."""
    u, v = J
    b = branch_params(locate_branch(u))
    if v > b.right:
        return None
    return (u + b.c, v + b.c)


def certify_against_T(c: ColumnPair) -> CertificationReport:
    """Check that T lifts every interval onto the one above it, and top(L^0) onto b(S)."""
    checked = 0
    for name, col in (("L", c.L), ("S", c.S)):
        ivs = col.intervals
        for i in range(len(ivs) - 1):
            J, above = ivs[i], ivs[i + 1]
            if apply_T(J[0]) != above[0]:
                return CertificationReport(
                    c.n, False, checked, name, i, f"T({J[0]}) != {above[0]}"
                )
            if _translate(J) != above:
                return CertificationReport(
                    c.n, False, checked, name, i, "T(J) is not the interval above J"
                )
            checked += 1
    top_u = c.L.top[0]
    top0 = (top_u, top_u + alpha_pow(c.n + 1))
    if _translate(top0) != c.S.bottom:
        return CertificationReport(
            c.n, False, checked, "L0", c.L.height - 1, "T(top(L^0)) != b(S)"
        )
    checked += 1
    return CertificationReport(c.n, True, checked)
