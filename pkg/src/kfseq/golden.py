"""Exact arithmetic in Z[alpha] and Q(alpha), alpha = (sqrt(5) - 1) / 2.

``alpha`` is the inverse golden ratio, the positive root of
``alpha**2 + alpha - 1 = 0``.  Every point, endpoint and length produced by
this package is an integer combination ``a + b*alpha`` and is held as a
:class:`GoldenNumber`.  Discrepancy values carry rational coefficients and use
:class:`GoldenRational`.

Comparisons never touch floating point: the sign of ``a + b*alpha`` is read
off ``2a - b + b*sqrt(5)`` by comparing squares of integers.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

__all__ = [
    "Sign",
    "GoldenNumber",
    "GoldenRational",
    "ZERO",
    "ONE",
    "ALPHA",
    "gf_mul",
    "gf_cmp",
    "alpha_pow",
    "fibonacci",
    "gf_to_decimal",
    "parse_exact",
    "as_rational",
]


class Sign(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _sign(a: int, b: int) -> int:
    """Sign of ``a + b*alpha`` for integers a, b, as -1, 0 or 1."""
    s = 2 * a - b  # 2(a + b*alpha) = s + b*sqrt(5)
    if b == 0:
        return (s > 0) - (s < 0)
    if b > 0:
        if s >= 0:
            return 1
        return 1 if 5 * b * b > s * s else -1
    if s <= 0:
        return -1
    return 1 if s * s > 5 * b * b else -1


def _float(s: int, b: int, den: int) -> float:
    # (s + b*sqrt(5)) / den with ~70 guard bits over the cancellation bound
    if b == 0:
        return s / den
    m = max(abs(s).bit_length(), abs(b).bit_length()) + 70
    r = isqrt((5 * b * b) << (2 * m))
    num = (s << m) + (r if b > 0 else -r)
    return float(Fraction(num, den << m))


_FIB = [0, 1]


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1; F_{-1} = 1."""
    if n == -1:
        return 1
    if n < 0:
        raise ValueError("fibonacci index must be >= -1")
    while len(_FIB) <= n:
        _FIB.append(_FIB[-1] + _FIB[-2])
    return _FIB[n]


class GoldenNumber:
    """Immutable element ``a + b*alpha`` of Z[alpha], a and b Python ints."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenNumber is immutable")

    def __reduce__(self):
        return (GoldenNumber, (self.a, self.b))

    @property
    def coefficients(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text form, e.g. ``-1+2*alpha``."""
        return f"{self.a}{self.b:+d}*alpha"

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if type(other) is GoldenNumber:
            return GoldenNumber(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return GoldenNumber(self.a + other, self.b)
        if isinstance(other, (GoldenRational, Fraction)):
            return as_rational(self) + other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self) -> GoldenNumber:
        return self

    def __sub__(self, other):
        if type(other) is GoldenNumber:
            return GoldenNumber(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return GoldenNumber(self.a - other, self.b)
        if isinstance(other, (GoldenRational, Fraction)):
            return as_rational(self) - other
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GoldenNumber(other - self.a, -self.b)
        if isinstance(other, Fraction):
            return other - as_rational(self)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is GoldenNumber:
            return gf_mul(self, other)
        if isinstance(other, int):
            return GoldenNumber(self.a * other, self.b * other)
        if isinstance(other, (GoldenRational, Fraction)):
            return as_rational(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        return as_rational(self) / other

    def __pow__(self, n: int) -> GoldenNumber:
        if n < 0:
            raise ValueError("negative powers leave Z[alpha]")
        result, base = GoldenNumber(1, 0), self
        while n:
            if n & 1:
                result = gf_mul(result, base)
            base = gf_mul(base, base)
            n >>= 1
        return result

    def conjugate(self) -> GoldenNumber:
        """Image under sqrt(5) -> -sqrt(5), i.e. alpha -> -1 - alpha."""
        return GoldenNumber(self.a - self.b, -self.b)

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b - self.b * self.b

    # -- order ---------------------------------------------------------------

    def sign(self) -> int:
        return _sign(self.a, self.b)

    def _diff_sign(self, other) -> int:
        if type(other) is GoldenNumber:
            return _sign(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return _sign(self.a - other, self.b)
        if isinstance(other, (GoldenRational, Fraction)):
            return as_rational(self)._diff_sign(other)
        raise TypeError

    def __eq__(self, other) -> bool:
        if type(other) is GoldenNumber:
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, GoldenRational, Fraction)):
            return self._diff_sign(other) == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        try:
            return self._diff_sign(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other) -> bool:
        try:
            return self._diff_sign(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other) -> bool:
        try:
            return self._diff_sign(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other) -> bool:
        try:
            return self._diff_sign(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __float__(self) -> float:
        return _float(2 * self.a - self.b, self.b, 2)

    def __floor__(self) -> int:
        s, b = 2 * self.a - self.b, self.b
        r = isqrt(5 * b * b)
        k = (s + (r if b >= 0 else -r)) // 2
        while self._diff_sign(k) < 0:
            k -= 1
        while self._diff_sign(k + 1) >= 0:
            k += 1
        return k


class GoldenRational:
    """Immutable element ``(a + b*alpha) / d`` of Q(alpha), reduced, ``d > 0``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int = 0, b: int = 0, d: int = 1) -> None:
        a, b, d = int(a), int(b), int(d)
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("GoldenRational is immutable")

    def __reduce__(self):
        return (GoldenRational, (self.a, self.b, self.d))

    @property
    def unit_part(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def alpha_part(self) -> Fraction:
        return Fraction(self.b, self.d)

    def __repr__(self) -> str:
        return f"GoldenRational({self.a}, {self.b}, {self.d})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """``a+b*alpha`` when integral, else ``(a+b*alpha)/d``."""
        body = f"{self.a}{self.b:+d}*alpha"
        return body if self.d == 1 else f"({body})/{self.d}"

    def to_golden(self) -> GoldenNumber:
        if self.d != 1:
            raise ValueError(f"{self} is not in Z[alpha]")
        return GoldenNumber(self.a, self.b)

    def _coerce(self, other) -> GoldenRational | None:
        if type(other) is GoldenRational:
            return other
        if isinstance(other, (GoldenNumber, int, Fraction)):
            return as_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.d == o.d:
            return GoldenRational(self.a + o.a, self.b + o.b, self.d)
        return GoldenRational(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self) -> GoldenRational:
        return GoldenRational(-self.a, -self.b, self.d)

    def __pos__(self) -> GoldenRational:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = gf_mul(GoldenNumber(self.a, self.b), GoldenNumber(o.a, o.b))
        return GoldenRational(p.a, p.b, self.d * o.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not (o.a or o.b):
            raise ZeroDivisionError("division by zero")
        # x / y = x * conj(y) / norm(y), norm(y) = y * conj(y) is an integer
        y = GoldenNumber(o.a, o.b)
        p = gf_mul(GoldenNumber(self.a, self.b), y.conjugate())
        return GoldenRational(p.a * o.d, p.b * o.d, self.d * y.norm())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sign(self) -> int:
        return _sign(self.a, self.b)

    def _diff_sign(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError
        if self.d == o.d:
            return _sign(self.a - o.a, self.b - o.b)
        return _sign(self.a * o.d - o.a * self.d, self.b * o.d - o.b * self.d)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b and self.d == o.d

    def __hash__(self) -> int:
        if self.d == 1:
            return hash(self.a) if self.b == 0 else hash((self.a, self.b))
        if self.b == 0:
            return hash(Fraction(self.a, self.d))
        return hash((self.a, self.b, self.d))

    def __lt__(self, other) -> bool:
        try:
            return self._diff_sign(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other) -> bool:
        try:
            return self._diff_sign(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other) -> bool:
        try:
            return self._diff_sign(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other) -> bool:
        try:
            return self._diff_sign(other) >= 0
        except TypeError:
            return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __float__(self) -> float:
        return _float(2 * self.a - self.b, self.b, 2 * self.d)

    def __floor__(self) -> int:
        # floor(y / d) == floor(floor(y) / d) for a positive integer d
        return GoldenNumber(self.a, self.b).__floor__() // self.d


Exact = Union[int, Fraction, GoldenNumber, GoldenRational]

ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
ALPHA = GoldenNumber(0, 1)


def as_rational(x: Exact) -> GoldenRational:
    if type(x) is GoldenRational:
        return x
    if type(x) is GoldenNumber:
        return GoldenRational(x.a, x.b, 1)
    if isinstance(x, int):
        return GoldenRational(x, 0, 1)
    if isinstance(x, Fraction):
        return GoldenRational(x.numerator, 0, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to GoldenRational")


def gf_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    """Product in Z[alpha], reduced with alpha**2 = 1 - alpha."""
    bb = x.b * y.b
    return GoldenNumber(x.a * y.a + bb, x.a * y.b + y.a * x.b - bb)


def gf_cmp(x: Exact, y: Exact) -> Sign:
    if type(x) is GoldenNumber and type(y) is GoldenNumber:
        return Sign(_sign(x.a - y.a, x.b - y.b))
    return Sign(as_rational(x)._diff_sign(y))


_POW_CACHE: list[GoldenNumber] = [ONE]


def alpha_pow(n: int) -> GoldenNumber:
    """alpha**n = (-1)**n * (F_{n-1} - F_n * alpha)."""
    if n < 0:
        raise ValueError("alpha_pow needs n >= 0")
    if n < len(_POW_CACHE):
        return _POW_CACHE[n]
    for k in range(len(_POW_CACHE), n + 1):
        s = -1 if k & 1 else 1
        _POW_CACHE.append(GoldenNumber(s * fibonacci(k - 1), -s * fibonacci(k)))
    return _POW_CACHE[n]


def gf_to_decimal(x: Exact, digits: int) -> str:
    """Correctly rounded (half-even) decimal string with ``digits`` fraction digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = as_rational(x) * 10**digits
    n = scaled.__floor__()
    c = (2 * (scaled - n))._diff_sign(1)  # fractional part against 1/2
    if c > 0 or (c == 0 and n % 2 == 1):
        n += 1
    sign = "-" if n < 0 else ""
    q, r = divmod(abs(n), 10**digits)
    return f"{sign}{q}.{r:0{digits}d}"


_TEXT_RE = re.compile(
    r"^\s*(?:\(\s*)?([+-]?\d+)\s*(?:([+-])\s*(\d+)\s*\*\s*alpha)?\s*(?:\)\s*/\s*(\d+))?\s*$"
)

_RATIO_RE = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")


def parse_exact(text: str) -> GoldenNumber | GoldenRational:
    """Parse ``a+b*alpha``, ``(a+b*alpha)/d``, ``a/d``, a plain integer, or ``alpha``.

    Returns a :class:`GoldenNumber` whenever the value has no denominator.
    """
    t = text.strip()
    if t in ("alpha", "+alpha"):
        return ALPHA
    q = _RATIO_RE.match(t)
    if q is not None:
        a, b, d = int(q.group(1)), 0, int(q.group(2))
    else:
        m = _TEXT_RE.match(t)
        if m is None:
            raise ValueError(f"not an exact value: {text!r}")
        a = int(m.group(1))
        b = int(m.group(3)) if m.group(3) is not None else 0
        if m.group(2) == "-":
            b = -b
        opened = "(" in t
        if opened != (m.group(4) is not None):
            raise ValueError(f"unbalanced exact value: {text!r}")
        if m.group(4) is None:
            return GoldenNumber(a, b)
        d = int(m.group(4))
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    r = GoldenRational(a, b, d)
    return r.to_golden() if r.d == 1 else r
