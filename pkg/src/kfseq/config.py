"""Resource caps and the package's exception types."""

from __future__ import annotations

import os

DEFAULT_MAX_LEVEL = 25
DEFAULT_MAX_EXACT_N = 20000


class DomainError(ValueError):
    """A point lies outside the domain of the requested map."""

    code = "domain_error"


class ResourceLimitError(RuntimeError):
    """A request would exceed a configured size cap."""

    code = "resource_limit"


def max_level() -> int:
    """Refinement level cap; ``KFSEQ_MAX_LEVEL`` overrides the default of 25."""
    raw = os.environ.get("KFSEQ_MAX_LEVEL")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_LEVEL
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"KFSEQ_MAX_LEVEL must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("KFSEQ_MAX_LEVEL must be non-negative")
    return value


def check_level(n: int, cap: int | None = None) -> None:
    cap = max_level() if cap is None else cap
    if n > cap:
        raise ResourceLimitError(f"level {n} exceeds cap {cap} (set KFSEQ_MAX_LEVEL to raise it)")
