"""The Kakutani-Fibonacci sequence of points, by blocks and by the orbit of 0."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .config import ResourceLimitError, check_level, max_level
from .golden import ALPHA, ZERO, GoldenNumber, alpha_pow
from .iet import orbit
from .partition import counts


@dataclass(frozen=True)
class PointBlock:
    n: int
    points: tuple[GoldenNumber, ...]

    def __len__(self) -> int:
        return len(self.points)


def block(n: int, cap: Optional[int] = None) -> PointBlock:
    """Lambda_n: Lambda_{n+1} appends the first l_n points shifted by alpha^(n+1)."""
    if n < 1:
        raise ValueError("block level must be >= 1")
    check_level(n, cap)
    pts = [ZERO, ALPHA]
    for k in range(1, n):
        shift = alpha_pow(k + 1)
        pts.extend([x + shift for x in pts[: counts(k).long]])
    return PointBlock(n, tuple(pts))


def level_for_count(count: int) -> int:
    """Smallest level n >= 1 with t_n >= count."""
    n = 1
    while counts(n).total < count:
        n += 1
    return n


def xi_stream(count: int, cap: Optional[int] = None) -> Iterator[GoldenNumber]:
    """Yield xi_1, ..., xi_count by iterating T from 0."""
    if count < 1:
        raise ValueError("count must be >= 1")
    cap = max_level() if cap is None else cap
    if counts(cap).total < count:
        raise ResourceLimitError(f"count {count} exceeds t_{cap} = {counts(cap).total}")
    return orbit(ZERO, count)


def xi_blocks(count: int, cap: Optional[int] = None) -> list[GoldenNumber]:
    """First ``count`` points taken from the block construction."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(block(level_for_count(count), cap).points[:count])


@dataclass(frozen=True)
class EquivalenceReport:
    n: int
    ok: bool
    compared: int
    mismatch: Optional[int] = None
    block_value: Optional[GoldenNumber] = None
    orbit_value: Optional[GoldenNumber] = None


def verify_orbit_equivalence(n: int, cap: Optional[int] = None) -> EquivalenceReport:
    """Compare Lambda_n element-wise with 0, T(0), ..., T^(t_n - 1)(0)."""
    pts = block(n, cap).points
    compared = 0
    for i, (x, y) in enumerate(zip(pts, orbit(ZERO, len(pts)))):
        if x != y:
            return EquivalenceReport(n, False, compared, i, x, y)
        compared += 1
    return EquivalenceReport(n, True, compared)
