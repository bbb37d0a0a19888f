"""P_n, Q_n from the three-term recurrence and from first-order stepping.

``d^n Ai/dz^n = P_n(z) Ai(z) + Q_n(z) Ai'(z)``; the same pair governs Bi.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from airypoly.abrapoly.polynomial import ONE, ZERO, Z, IntPolynomial, NonIntegerCoefficientError

__all__ = [
    "PolyPair",
    "even_from_odd",
    "pq_diffdiff",
    "pq_recurrence",
    "step_diffdiff",
]


@dataclass(frozen=True)
class PolyPair:
    n: int
    P: IntPolynomial
    Q: IntPolynomial


SEEDS = (
    PolyPair(0, ONE, ZERO),
    PolyPair(1, ZERO, ONE),
    PolyPair(2, Z, ZERO),
)


@lru_cache(maxsize=8)
def _recurrence_rows(N: int) -> tuple[PolyPair, ...]:
    rows = list(SEEDS[: N + 1])
    for n in range(1, N - 1):
        # row n+2 from rows n and n-1
        rows.append(
            PolyPair(
                n + 2,
                rows[n].P.shift() + rows[n - 1].P.scale(n),
                rows[n].Q.shift() + rows[n - 1].Q.scale(n),
            )
        )
    return tuple(rows)


def pq_recurrence(N: int) -> list[PolyPair]:
    """Rows ``n = 0..N`` from ``X_{n+2} = z X_n + n X_{n-1}``.

    This is the reference route every other construction is compared with.
    """
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    return list(_recurrence_rows(N))


def step_diffdiff(pair: PolyPair) -> PolyPair:
    """``P_{n+1} = P_n' + z Q_n`` and ``Q_{n+1} = Q_n' + P_n``."""
    return PolyPair(
        pair.n + 1,
        pair.P.derivative() + pair.Q.shift(),
        pair.Q.derivative() + pair.P,
    )


def pq_diffdiff(N: int) -> list[PolyPair]:
    """Rows ``n = 0..N`` by first-order differential-difference stepping from n = 0."""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    rows = [SEEDS[0]]
    for _ in range(N):
        rows.append(step_diffdiff(rows[-1]))
    return rows


def even_from_odd(m: int, odd_pairs) -> PolyPair:
    """Recover ``(P_{2m}, Q_{2m})`` as ``(X_{2m+3} - z X_{2m+1}) / (2m+1)``.

    ``odd_pairs`` maps indices to :class:`PolyPair` (a dict, or any sequence
    indexed by n such as the list from :func:`pq_recurrence`) and must
    supply rows ``2m+1`` and ``2m+3``.  A nonzero remainder means the odd
    rows are inconsistent and raises :class:`NonIntegerCoefficientError`.
    """
    if m < 1:
        raise ValueError(f"even_from_odd needs m >= 1, got {m}")
    lo, hi = odd_pairs[2 * m + 1], odd_pairs[2 * m + 3]
    if lo.n != 2 * m + 1 or hi.n != 2 * m + 3:
        raise ValueError("odd_pairs must supply rows 2m+1 and 2m+3")
    d = 2 * m + 1
    try:
        P = (hi.P - lo.P.shift()).exact_div(d)
        Q = (hi.Q - lo.Q.shift()).exact_div(d)
    except NonIntegerCoefficientError as exc:
        raise NonIntegerCoefficientError(f"row {2 * m}: {exc}") from None
    return PolyPair(2 * m, P, Q)
