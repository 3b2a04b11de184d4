"""The Kakutani-Fibonacci interval exchange T on [0, 1).

T is a translation ``x -> x + c_k`` on each of countably many branches
``I_k``:

* ``I_1 = [0, alpha^2)``,
* ``I_2m = [1 - alpha^(2m), 1 - alpha^(2m+2))``,
* ``I_2m+1 = [alpha - alpha^(2m+1), alpha - alpha^(2m+3))``,

with ``c_k = alpha^k - left(I_k)``, so that ``I_k + c_k = [alpha^k, alpha^(k-1))``.
Branch endpoints accumulate at alpha (odd branches) and at 1 (even branches).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .config import DomainError
from .golden import ALPHA, ONE, ZERO, GoldenNumber, alpha_pow

_ALPHA_F = (math.sqrt(5.0) - 1.0) / 2.0
_LOG_ALPHA = math.log(_ALPHA_F)
_ALPHA2 = alpha_pow(2)


@dataclass(frozen=True)
class Branch:
    k: int
    left: GoldenNumber
    right: GoldenNumber
    c: GoldenNumber

    @property
    def length(self) -> GoldenNumber:
        return self.right - self.left

    @property
    def image(self) -> tuple[GoldenNumber, GoldenNumber]:
        return (self.left + self.c, self.right + self.c)


def _closed_form_endpoints(k: int) -> tuple[GoldenNumber, GoldenNumber]:
    if k == 1:
        return ZERO, _ALPHA2
    m, odd = divmod(k, 2)
    if odd:
        return ALPHA - alpha_pow(2 * m + 1), ALPHA - alpha_pow(2 * m + 3)
    return ONE - alpha_pow(2 * m), ONE - alpha_pow(2 * m + 2)


def literal_endpoints(k: int) -> tuple[GoldenNumber, GoldenNumber]:
    """Branch endpoints as the literal partial sums of odd or even powers of alpha."""
    if k < 1:
        raise ValueError("branch index must be >= 1")
    if k == 1:
        return ZERO, _ALPHA2
    m, odd = divmod(k, 2)
    first = 2 if odd else 1
    left = sum((alpha_pow(2 * j + first) for j in range(m)), ZERO)
    return left, left + alpha_pow(2 * m + first)


_BRANCHES: list[Branch] = []


def branch_params(k: int) -> Branch:
    """Exact domain and translation constant of branch ``k >= 1``."""
    if k < 1:
        raise ValueError("branch index must be >= 1")
    while len(_BRANCHES) < k:
        j = len(_BRANCHES) + 1
        left, right = _closed_form_endpoints(j)
        _BRANCHES.append(Branch(j, left, right, alpha_pow(j) - left))
    return _BRANCHES[k - 1]


def branch_table(max_k: int) -> list[Branch]:
    return [branch_params(k) for k in range(1, max_k + 1)]


def self_check(max_k: int = 40) -> None:
    """Assert closed-form endpoints equal the literal partial sums for k <= max_k."""
    for k in range(1, max_k + 1):
        b = branch_params(k)
        if (b.left, b.right) != literal_endpoints(k):
            raise AssertionError(f"closed form disagrees with partial sums at k={k}")


self_check()


def _approx(y) -> float:
    d = getattr(y, "d", 1)
    return y.a / d + (y.b / d) * _ALPHA_F


def alpha_exponent(y) -> int:
    """Largest ``j >= 0`` with ``y <= alpha**j``, for exact ``0 < y <= 1``.

    A float estimate seeds the search; the answer is settled by exact
    comparisons, galloping when the estimate is off.
    """
    est = _approx(y)
    j = int(math.log(est) / _LOG_ALPHA) if est > 0 else 0
    j = max(j, 0)
    if y <= alpha_pow(j):
        lo, step = j, 1
        while y <= alpha_pow(lo + step):
            lo += step
            step *= 2
        hi = lo + step
    else:
        hi, step = j, 1
        while hi - step > 0 and not y <= alpha_pow(hi - step):
            hi -= step
            step *= 2
        lo = max(hi - step, 0)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if y <= alpha_pow(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _check_domain(x) -> None:
    if x < 0 or x >= 1:
        raise DomainError(f"{x} is outside [0, 1)")


def locate_branch(x) -> int:
    """Index k of the branch containing x."""
    _check_domain(x)
    if x < _ALPHA2:
        return 1
    if x < ALPHA:
        # alpha - x in (alpha^(2m+3), alpha^(2m+1)]
        return 2 * ((alpha_exponent(ALPHA - x) - 1) // 2) + 1
    # 1 - x in (alpha^(2m+2), alpha^(2m)]
    return 2 * (alpha_exponent(ONE - x) // 2)


def apply_T(x):
    return x + branch_params(locate_branch(x)).c


def image_branch(y) -> int:
    """Index k with ``y`` in the image ``[alpha^k, alpha^(k-1))`` of branch k."""
    _check_domain(y)
    if y == 0:
        raise DomainError("0 is not in the image of T")
    j = alpha_exponent(y)
    return j if y == alpha_pow(j) else j + 1


def apply_T_inverse(y):
    return y - branch_params(image_branch(y)).c


def orbit(x0, n: int) -> Iterator:
    """Yield x0, T(x0), ..., T^(n-1)(x0)."""
    if n < 0:
        raise ValueError("orbit length must be >= 0")
    if n == 0:
        return
    _check_domain(x0)
    x = x0
    yield x
    for _ in range(n - 1):
        x = apply_T(x)
        yield x


def split_by_branch(u, v) -> tuple[list[tuple[int, object, object]], list[int]]:
    """Cut ``[u, v)`` along branch boundaries.

    Returns finite pieces ``(k, lo, hi)`` and the first branch index of every
    infinite run of branches accumulating at alpha or 1; such a run starting
    at branch k is ``[left_k, alpha)`` or ``[left_k, 1)`` and has length alpha^k.
    """
    if not u < v:
        raise ValueError("empty interval")
    _check_domain(u)
    if v > 1:
        raise DomainError(f"{v} is beyond 1")
    if u < ALPHA < v:
        left, ltail = split_by_branch(u, ALPHA)
        right, rtail = split_by_branch(ALPHA, v)
        return left + right, ltail + rtail
    pieces = []
    x = u
    while True:
        b = branch_params(locate_branch(x))
        if v <= b.right:
            pieces.append((b.k, x, v))
            return pieces, []
        pieces.append((b.k, x, b.right))
        x = b.right
        if v == ALPHA or v == ONE:
            return pieces, [b.k + 2]


def image_measure(u, v):
    """Exact Lebesgue measure of T([u, v))."""
    pieces, tails = split_by_branch(u, v)
    total = sum((hi - lo for _, lo, hi in pieces), ZERO)
    return total + sum((alpha_pow(k) for k in tails), ZERO)
