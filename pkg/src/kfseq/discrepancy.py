"""Exact extreme and star discrepancy of finite point sets in [0, 1).

Work with ``F(t) = #{x_j < t} / N - t``.  For a half-open interval the local
error is ``F(b) - F(a)``, so the extreme discrepancy is the largest rise or
fall of F between two positions ``a < b``.  F decreases linearly between
sample points and jumps up just after each one, so every extremum sits at 0,
at 1, at a sample point ``x`` or at its right limit ``x+``.  Both kernels scan
that candidate list once; values are exact because ``N * F`` lies in Z[alpha]
(or Q, or Q(alpha)) whenever the points do.

:func:`brute_force_discrepancy` enumerates every candidate pair and counts
points directly; it is the independent oracle for the fast kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .config import DEFAULT_MAX_EXACT_N, DomainError, ResourceLimitError, check_level
from .golden import GoldenRational, as_rational, gf_to_decimal
from .partition import Partition, kakutani_levels, counts
from .points import xi_stream


class Endpoint(NamedTuple):
    """An interval endpoint; ``limit`` marks the right limit ``value+``."""

    value: object
    limit: bool = False

    def to_text(self) -> str:
        v = self.value
        text = v.to_text() if hasattr(v, "to_text") else as_rational(v).to_text()
        return text + "+" if self.limit else text


@dataclass(frozen=True)
class DiscrepancyReport:
    N: int
    value: GoldenRational
    witness: tuple[Endpoint, Endpoint]
    kernel: str

    @property
    def attained(self) -> bool:
        """False when the supremum is only approached (a limit endpoint)."""
        return not (self.witness[0].limit or self.witness[1].limit)

    @property
    def normalized(self) -> GoldenRational:
        """N * D_N; for a partition this is t_n * D(pi_n)."""
        return self.value * self.N

    @property
    def normalized_log(self) -> float:
        """N * D_N / log N (nan for N = 1)."""
        if self.N < 2:
            return math.nan
        return float(self.normalized) / math.log(self.N)

    def decimal(self, digits: int = 15) -> str:
        return gf_to_decimal(self.value, digits)


def _sorted_points(points: Iterable) -> list:
    pts = list(points)
    if not pts:
        raise ValueError("need at least one point")
    for x in pts:
        if x < 0 or x >= 1:
            raise DomainError(f"point {x} is outside [0, 1)")
    pts.sort()
    return pts


def _candidates(pts: list) -> list[tuple[object, Endpoint]]:
    """(N*F at position, position) along [0, 1] in increasing order."""
    N = len(pts)
    out: list[tuple[object, Endpoint]] = []
    if pts[0] != 0:
        out.append((0, Endpoint(0)))
    i = 0
    while i < N:
        v = pts[i]
        j = i
        while j < N and pts[j] == v:
            j += 1
        out.append((i - N * v, Endpoint(v)))
        out.append((j - N * v, Endpoint(v, True)))
        i = j
    out.append((0, Endpoint(1)))
    return out


def _report(N: int, scaled, a: Endpoint, b: Endpoint, kernel: str) -> DiscrepancyReport:
    return DiscrepancyReport(N, as_rational(scaled) / N, (a, b), kernel)


def extreme_discrepancy(points: Iterable) -> DiscrepancyReport:
    """sup over 0 <= a < b <= 1 of |#{x_j in [a, b)}/N - (b - a)|, exactly."""
    pts = _sorted_points(points)
    N = len(pts)
    cand = _candidates(pts)
    best, wit = None, None
    lo_val, lo_pos = cand[0]
    hi_val, hi_pos = cand[0]
    for val, pos in cand[1:]:
        rise = val - lo_val
        if best is None or rise > best:
            best, wit = rise, (lo_pos, pos)
        fall = hi_val - val
        if fall > best:
            best, wit = fall, (hi_pos, pos)
        if val < lo_val:
            lo_val, lo_pos = val, pos
        if val > hi_val:
            hi_val, hi_pos = val, pos
    return _report(N, best, wit[0], wit[1], "extreme")


def star_discrepancy(points: Iterable) -> DiscrepancyReport:
    """sup over 0 < b <= 1 of |#{x_j < b}/N - b|, via max_i max(i/N - x_(i), x_(i) - (i-1)/N)."""
    pts = _sorted_points(points)
    N = len(pts)
    best, wit = None, None
    for i, x in enumerate(pts, start=1):
        over = i - N * x  # [0, x+) holds i points
        if best is None or over > best:
            best, wit = over, Endpoint(x, True)
        under = N * x - (i - 1)  # [0, x) holds at most i - 1 points
        if under > best:
            best, wit = under, Endpoint(x)
    return _report(N, best, Endpoint(0), wit, "star")


def _key(e: Endpoint):
    return (as_rational(e.value), e.limit)


def _inside(x, a: Endpoint, b: Endpoint) -> bool:
    above = x > a.value if a.limit else x >= a.value
    below = x <= b.value if b.limit else x < b.value
    return above and below


def brute_force_discrepancy(points: Sequence, anchored: bool = False, max_n: int = 200) -> GoldenRational:
    """Enumerate every candidate interval and count points directly."""
    pts = list(points)
    N = len(pts)
    if N == 0:
        raise ValueError("need at least one point")
    if N > max_n:
        raise ResourceLimitError(f"brute force limited to {max_n} points")
    for x in pts:
        if x < 0 or x >= 1:
            raise DomainError(f"point {x} is outside [0, 1)")
    ends = [Endpoint(0), Endpoint(1)]
    for x in pts:
        ends += [Endpoint(x), Endpoint(x, True)]
    lefts = [Endpoint(0)] if anchored else ends
    best = GoldenRational(0)
    for a in lefts:
        if a.value == 1:
            continue
        for b in ends:
            if not _key(a) < _key(b):
                continue
            count = sum(1 for x in pts if _inside(x, a, b))
            err = as_rational(Fraction(count, N)) - (as_rational(b.value) - a.value)
            if err < 0:
                err = -err
            if err > best:
                best = err
    return best


def partition_discrepancy(p: Partition) -> DiscrepancyReport:
    """Extreme discrepancy of the left endpoints of ``p``."""
    return extreme_discrepancy(p.breakpoints)


@dataclass(frozen=True)
class ProfileRow:
    level: int
    report: DiscrepancyReport
    score: float

    @property
    def N(self) -> int:
        return self.report.N


def _kernel(points: list, kernel: str, max_exact_n: int) -> DiscrepancyReport:
    if kernel == "star":
        return star_discrepancy(points)
    if kernel != "extreme":
        raise ValueError(f"unknown kernel {kernel!r}")
    if len(points) <= max_exact_n:
        return extreme_discrepancy(points)
    # D <= 2 D*: report the certified upper bound instead
    star = star_discrepancy(points)
    return DiscrepancyReport(star.N, star.value * 2, star.witness, "star-bound")


def low_discrepancy_profile(
    n_max: int,
    source: str = "points",
    kernel: str = "extreme",
    max_exact_n: Optional[int] = DEFAULT_MAX_EXACT_N,
    on_budget: str = "fallback",
) -> list[ProfileRow]:
    """Discrepancy along the Fibonacci ladder N = t_1, t_2, ... <= n_max.

    ``source="points"`` scores N * D_N / log N for the first N points of xi;
    ``source="partition"`` scores t_n * D(pi_n) for the golden partitions.
    Past ``max_exact_n`` the extreme kernel falls back to the 2 D* bound, or
    raises when ``on_budget="raise"``.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    max_exact_n = math.inf if max_exact_n is None else max_exact_n
    levels = []
    n = 1
    while counts(n).total <= n_max:
        levels.append(n)
        n += 1
    check_level(levels[-1])
    if on_budget == "raise" and kernel == "extreme":
        big = [counts(k).total for k in levels if counts(k).total > max_exact_n]
        if big:
            raise ResourceLimitError(f"N = {big[0]} exceeds the exact kernel budget {max_exact_n}")
    rows = []
    if source == "points":
        top = counts(levels[-1]).total
        xi = list(xi_stream(top))
        for k in levels:
            rep = _kernel(xi[: counts(k).total], kernel, max_exact_n)
            rows.append(ProfileRow(k, rep, rep.normalized_log))
    elif source == "partition":
        for p in kakutani_levels(levels[-1]):
            if p.level in levels:
                rep = _kernel(list(p.breakpoints), kernel, max_exact_n)
                rows.append(ProfileRow(p.level, rep, float(rep.normalized)))
    else:
        raise ValueError(f"unknown source {source!r}")
    return rows
