"""Ai, Ai', Bi, Bi' from the Maclaurin series of the two standard solutions of w'' = z w.

With ``f = sum a_k z^{3k}`` and ``g = sum b_k z^{3k+1}`` (``a_0 = b_0 = 1``):

    Ai = c1 f - c2 g,        Bi = sqrt(3) (c1 f + c2 g),
    c1 = Ai(0) = 1 / (3^{2/3} Gamma(2/3)),   c2 = -Ai'(0) = 1 / (3^{1/3} Gamma(1/3)).

The two series cancel heavily for large positive z (Ai decays while f, g
grow), so summation always runs with guard digits and only the final
values are rounded to the requested precision.
"""

from __future__ import annotations

from dataclasses import dataclass

from airypoly.airynum._context import DomainError, context, finish

__all__ = ["AIRY_DOMAIN", "AiryValues", "airy_eval"]

AIRY_DOMAIN = 6.0
GUARD_DIGITS = 20


@dataclass(frozen=True)
class AiryValues:
    z: float
    ai: float
    aip: float
    bi: float
    bip: float

    @property
    def wronskian(self):
        return self.ai * self.bip - self.aip * self.bi


def _series(ctx, z):
    z2 = z * z
    z3 = z2 * z
    tol = ctx.mpf(10) ** (-(ctx.dps + 3))
    # k = 0 terms: f = 1, g = z, g' = 1
    A = B = ctx.one
    prev = ctx.one  # z^{3(k-1)}
    f, fp_, g, gp = ctx.one, ctx.zero, z, ctx.one
    k = 0
    while True:
        k += 1
        A = A / ((3 * k - 1) * (3 * k))
        B = B / ((3 * k) * (3 * k + 1))
        pw = prev * z3  # z^{3k}
        tf, tg = A * pw, B * pw * z
        f += tf
        g += tg
        fp_ += 3 * k * A * prev * z2
        gp += (3 * k + 1) * B * pw
        prev = pw
        if abs(tf) + abs(tg) < tol * max(abs(f), abs(g), ctx.one) and k > 2:
            return f, fp_, g, gp


def airy_eval(z, dps: int | None = None) -> AiryValues:
    """Ai, Ai', Bi, Bi' at real ``z`` with ``|z| <= 6``.

    Returns floats for ``dps=None``; otherwise mpmath numbers at ``dps`` digits.
    """
    if abs(z) > AIRY_DOMAIN:
        raise DomainError(f"airy_eval requires |z| <= {AIRY_DOMAIN}, got z={z}")
    work = context((dps or 15) + GUARD_DIGITS)
    zz = work.mpf(z)
    c1 = 1 / (work.cbrt(9) * work.gamma(work.mpf(2) / 3))
    c2 = 1 / (work.cbrt(3) * work.gamma(work.mpf(1) / 3))
    f, fp_, g, gp = _series(work, zz)
    s3 = work.sqrt(3)
    return AiryValues(
        finish(work, zz, dps),
        finish(work, c1 * f - c2 * g, dps),
        finish(work, c1 * fp_ - c2 * gp, dps),
        finish(work, s3 * (c1 * f + c2 * g), dps),
        finish(work, s3 * (c1 * fp_ + c2 * gp), dps),
    )
