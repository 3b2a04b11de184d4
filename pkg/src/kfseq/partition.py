"""Kakutani alpha-refinements of partitions of [0, 1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .config import check_level
from .golden import ALPHA, ONE, ZERO, GoldenNumber, alpha_pow


@dataclass(frozen=True)
class Partition:
    """A partition of [0, 1) stored by its left endpoints.

    ``breakpoints`` is strictly increasing and starts at 0; the last interval
    ends at 1.  Entries are exact numbers (``GoldenNumber`` for the golden
    sequence, ``Fraction`` for a rational alpha).
    """

    breakpoints: tuple
    level: int = 0

    def __post_init__(self):
        bps = self.breakpoints
        if not bps or bps[0] != 0:
            raise ValueError("first breakpoint must be 0")
        for u, v in zip(bps, bps[1:]):
            if not u < v:
                raise ValueError("breakpoints must be strictly increasing")
        if not bps[-1] < 1:
            raise ValueError("breakpoints must lie in [0, 1)")

    def __len__(self) -> int:
        return len(self.breakpoints)

    @property
    def _one(self):
        return ONE if isinstance(self.breakpoints[0], GoldenNumber) else 1

    @property
    def intervals(self) -> list[tuple]:
        bps = self.breakpoints
        return list(zip(bps, bps[1:] + (self._one,)))

    @property
    def lengths(self) -> list:
        bps = self.breakpoints
        return [v - u for u, v in zip(bps, bps[1:] + (self._one,))]


class PartitionCounts(NamedTuple):
    long: int
    short: int
    total: int


def trivial_partition() -> Partition:
    return Partition((ZERO,), 0)


def refine(p: Partition, alpha=ALPHA) -> Partition:
    """Split every interval of maximal length; the alpha-proportional piece goes left."""
    if not 0 < alpha < 1:
        raise ValueError("alpha must lie in (0, 1)")
    lengths = p.lengths
    longest = max(lengths)
    out = []
    for u, length in zip(p.breakpoints, lengths):
        out.append(u)
        if length == longest:
            out.append(u + alpha * length)
    return Partition(tuple(out), p.level + 1)


def kakutani_levels(n: int, alpha=ALPHA, cap: int | None = None) -> Iterator[Partition]:
    """Yield alpha^0 omega, alpha^1 omega, ..., alpha^n omega."""
    if n < 0:
        raise ValueError("level must be >= 0")
    check_level(n, cap)
    p = trivial_partition() if isinstance(alpha, GoldenNumber) else Partition((Fraction(0),), 0)
    yield p
    for _ in range(n):
        p = refine(p, alpha)
        yield p


def kakutani_sequence(n: int, alpha=ALPHA, cap: int | None = None) -> Partition:
    """The n-fold alpha-refinement of the trivial partition {[0, 1)}."""
    for p in kakutani_levels(n, alpha, cap):
        pass
    return p


def counts(n: int) -> PartitionCounts:
    """Long/short/total interval counts of the n-th golden partition.

    >>> counts(5)
    PartitionCounts(long=8, short=5, total=13)
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    l, s = 1, 0
    for _ in range(n):
        l, s = l + s, l
    return PartitionCounts(l, s, l + s)


def length_classes(p: Partition) -> list[str]:
    """Label each interval of a golden partition at level n as 'long' or 'short'."""
    long_len, short_len = alpha_pow(p.level), alpha_pow(p.level + 1)
    out = []
    for length in p.lengths:
        if length == long_len:
            out.append("long")
        elif length == short_len:
            out.append("short")
        else:
            raise ValueError(f"interval of length {length} is neither alpha^n nor alpha^(n+1)")
    return out


def census(p: Partition) -> PartitionCounts:
    classes = length_classes(p)
    n_long = classes.count("long")
    return PartitionCounts(n_long, len(classes) - n_long, len(classes))
