"""Exact cross-checks between the three constructions of the sequence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .golden import ONE, ZERO, alpha_pow
from .iet import branch_table, literal_endpoints
from .partition import kakutani_sequence
from .points import block, verify_orbit_equivalence
from .stacking import certify_against_T, columns, initial_columns, advance


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _disjoint(intervals) -> Optional[tuple[int, int]]:
    for i, (a, b) in enumerate(intervals):
        for j in range(i + 1, len(intervals)):
            c, d = intervals[j]
            if a < d and c < b:
                return i, j
    return None


def check_branch_axioms(max_k: int = 40) -> Check:
    """Disjoint domains and images, image law, lengths, closed forms vs partial sums."""
    table = branch_table(max_k)
    for br in table:
        if (br.left, br.right) != literal_endpoints(br.k):
            return Check("branch-axioms", False, f"closed form != partial sums at k={br.k}")
        if br.image != (alpha_pow(br.k), alpha_pow(br.k) + alpha_pow(br.k + 1)):
            return Check("branch-axioms", False, f"image of I_{br.k} is {br.image}")
        if br.length != alpha_pow(br.k + 1):
            return Check("branch-axioms", False, f"|I_{br.k}| != alpha^{br.k + 1}")
    hit = _disjoint([(b.left, b.right) for b in table])
    if hit:
        return Check("branch-axioms", False, f"domains I_{hit[0] + 1}, I_{hit[1] + 1} overlap")
    hit = _disjoint([b.image for b in table])
    if hit:
        return Check("branch-axioms", False, f"images of I_{hit[0] + 1}, I_{hit[1] + 1} overlap")
    total = sum((b.length for b in table), ZERO)
    if total != ONE - alpha_pow(max_k):
        return Check("branch-axioms", False, f"sum of lengths {total} != 1 - alpha^{max_k}")
    return Check("branch-axioms", True, f"k <= {max_k}")


def check_orbit_equivalence(n: int) -> Check:
    rep = verify_orbit_equivalence(n)
    if rep.ok:
        return Check("orbit-equals-blocks", True, f"{rep.compared} points")
    return Check(
        "orbit-equals-blocks",
        False,
        f"index {rep.mismatch}: block {rep.block_value} vs orbit {rep.orbit_value}",
    )


def check_stacking(n: int) -> Check:
    c = initial_columns()
    for level in range(1, n + 1):
        if level > 1:
            c = advance(c)
        rep = certify_against_T(c)
        if not rep.ok:
            return Check(
                "stacking-vs-T", False, f"level {level}, column {rep.column}[{rep.index}]: {rep.detail}"
            )
    return Check("stacking-vs-T", True, f"levels 1..{n}")


def check_endpoints(n: int) -> Check:
    ends = set(kakutani_sequence(n).breakpoints)
    pts = block(n).points
    if len(set(pts)) != len(pts):
        return Check("endpoint-identity", False, "block has repeated points")
    if set(pts) != ends:
        return Check("endpoint-identity", False, "block points differ from partition endpoints")
    col = columns(n)
    if sorted(u for u, _ in col.intervals()) != sorted(ends):
        return Check("endpoint-identity", False, "columns differ from partition intervals")
    return Check("endpoint-identity", True, f"{len(pts)} endpoints")


def run_all(n: int, max_k: int = 40) -> list[Check]:
    return [
        check_orbit_equivalence(n),
        check_stacking(n),
        check_endpoints(n),
        check_branch_axioms(max_k),
    ]
