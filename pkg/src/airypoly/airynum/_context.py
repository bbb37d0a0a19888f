from __future__ import annotations

from functools import lru_cache

import mpmath


class DomainError(ValueError):
    """Argument outside the domain where an evaluation is defined or accurate."""


@lru_cache(maxsize=None)
def _mp(dps: int):
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def context(dps: int | None):
    """mpmath's float context for ``None``, otherwise a private context at ``dps`` digits.

    Contexts are never mutated after creation, so sharing them is safe.
    """
    if dps is None:
        return mpmath.fp
    if dps < 5:
        raise ValueError(f"dps must be at least 5, got {dps}")
    return _mp(int(dps))


def finish(ctx, value, dps: int | None):
    """Convert a result computed in ``ctx`` to the caller's requested type."""
    if dps is None:
        return float(value)
    return context(dps).mpf(value)
