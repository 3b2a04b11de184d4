"""Quasi-Monte Carlo integration and Birkhoff averages along orbits of T."""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .golden import GoldenNumber, GoldenRational, as_rational, parse_exact
from .iet import orbit
from .points import xi_stream


@dataclass(frozen=True)
class Integrand:
    id: str
    evaluator: Callable[[float], float] = field(repr=False)
    exact_integral: float
    continuous: bool = True

    def __call__(self, x: float) -> float:
        return self.evaluator(x)


_SQRT2 = math.sqrt(2.0)

CATALOG: dict[str, Integrand] = {
    f.id: f
    for f in (
        Integrand("one", lambda x: 1.0, 1.0),
        Integrand("x", lambda x: x, 0.5),
        Integrand("x2", lambda x: x * x, 1.0 / 3.0),
        Integrand("sin2pi", lambda x: _SQRT2 * math.sin(2.0 * math.pi * x), 0.0),
        Integrand("abs", lambda x: abs(x - 0.5), 0.25),
        # outside the continuity hypothesis; reported, never pass/fail
        Integrand("step", lambda x: 1.0 if x < 0.5 else 0.0, 0.5, continuous=False),
    )
}


def get_integrand(f) -> Integrand:
    if isinstance(f, Integrand):
        return f
    try:
        return CATALOG[f]
    except KeyError:
        raise KeyError(f"unknown integrand {f!r}; choose from {sorted(CATALOG)}") from None


@dataclass(frozen=True)
class IntegrationResult:
    estimate: float
    exact: float
    abs_error: float
    N: int
    source: str
    fn: str

    def to_dict(self) -> dict:
        return asdict(self)


def _average(f: Integrand, xs: Iterable) -> tuple[float, int]:
    vals = [f(float(x)) for x in xs]
    return math.fsum(vals) / len(vals), len(vals)


def source_points(source: str, N: int) -> Iterable:
    """Points for ``xi``, ``orbit:<x0>`` or ``random:<seed>``."""
    if source == "xi":
        return xi_stream(N)
    kind, _, arg = source.partition(":")
    if kind == "orbit" and arg:
        return orbit(parse_exact(arg), N)
    if kind == "random" and arg:
        rng = random.Random(int(arg))
        return [rng.random() for _ in range(N)]
    raise ValueError(f"unknown source {source!r}")


def qmc_integrate(f, N: int, source: str = "xi") -> IntegrationResult:
    """(1/N) sum f(x_j) over the first N points of ``source``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    f = get_integrand(f)
    est, n = _average(f, source_points(source, N))
    return IntegrationResult(est, f.exact_integral, abs(est - f.exact_integral), n, source, f.id)


def sample_start(seed: int) -> GoldenRational:
    """Seeded uniform start in [0, 1) as an exact dyadic rational."""
    rng = random.Random(seed)
    return as_rational(Fraction(rng.getrandbits(53), 1 << 53))


def birkhoff_average(x0, f, N: int) -> IntegrationResult:
    """(1/N) sum_{j<N} f(T^j x0); ``x0`` is exact or a ``random:<seed>`` string."""
    if N < 1:
        raise ValueError("N must be >= 1")
    f = get_integrand(f)
    x0, label = _start(x0)
    est, n = _average(f, orbit(x0, N))
    return IntegrationResult(est, f.exact_integral, abs(est - f.exact_integral), n, label, f.id)


def _start(x0):
    if isinstance(x0, str):
        if x0.startswith("random:"):
            seed = int(x0.split(":", 1)[1])
            return sample_start(seed), f"orbit:{sample_start(seed).to_text()} (seed {seed})"
        x0 = parse_exact(x0)
    return x0, f"orbit:{x0.to_text() if hasattr(x0, 'to_text') else x0}"


def birkhoff_errors(x0, f, checkpoints: Sequence[int]) -> dict[int, float]:
    """|Birkhoff average - integral| at each checkpoint, from a single orbit pass."""
    f = get_integrand(f)
    x0, _ = _start(x0)
    marks = sorted(set(checkpoints))
    out: dict[int, float] = {}
    vals: list[float] = []
    for x in orbit(x0, marks[-1]):
        vals.append(f(float(x)))
        if len(vals) == marks[len(out)]:
            out[len(vals)] = abs(math.fsum(vals) / len(vals) - f.exact_integral)
    return out
