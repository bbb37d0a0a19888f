"""Index bookkeeping behind the closed forms: M(m), the complementary count, and eps(m)."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["StaircaseIndices", "staircase"]


@dataclass(frozen=True)
class StaircaseIndices:
    m: int
    M: int
    Mcal: int
    eps: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def staircase(m: int) -> StaircaseIndices:
    """``M = ceil(2(m-1)/3)``, ``Mcal = m-1-M``, ``eps = 3M - 2(m-1)``."""
    if m < 1:
        raise ValueError(f"staircase needs m >= 1, got {m}")
    M = _ceil_div(2 * (m - 1), 3)
    return StaircaseIndices(m, M, m - 1 - M, 3 * M - 2 * (m - 1))
