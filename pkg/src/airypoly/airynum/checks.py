"""Numeric identity checks, each returning a :class:`CheckResult`.

Deviations are recorded as data; a check fails only when its worst
deviation exceeds the tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from airypoly.abrapoly.verify import DOCUMENTED, FAIL, PASS, CheckResult
from airypoly.airynum._context import context
from airypoly.airynum.airy import airy_eval
from airypoly.airynum.bessel import bessel_k, k_pair, kderiv
from airypoly.airynum.derivatives import dn_aiprime_bessel, dn_airy, genfun_check, sigma_check
from airypoly.airynum.reduction import k_as_pair, pq_from_bessel

__all__ = [
    "bessel_exact_checks",
    "central_weights",
    "fd_derivative",
    "fornberg_weights",
    "genfun_suite",
    "kderiv_fd_check",
    "numeric_suite",
    "ode_check",
    "reduce_closure_check",
    "route_check",
    "sigma_suite",
    "wronskian_check",
]

GRID = (-3.0, 5.0, 200)
GENFUN_POINTS = [(z, t) for z in (0.0, 0.5, 1.0) for t in (-0.3, -0.1, 0.1, 0.3)]


def fornberg_weights(offsets: Iterable, order: int) -> list[Fraction]:
    """Exact weights ``w_j`` with ``f^(order)(0) ~ sum_j w_j f(offsets[j])``."""
    xs = [Fraction(x) for x in offsets]
    n = len(xs)
    if order >= n:
        raise ValueError(f"{n} points cannot give a derivative of order {order}")
    # c[k][j]: weight of x_j for derivative k (Fornberg 1988, x0 = 0)
    c = [[Fraction(0)] * n for _ in range(order + 1)]
    c[0][0] = Fraction(1)
    c1 = Fraction(1)
    for i in range(1, n):
        c2 = Fraction(1)
        for j in range(i):
            c3 = xs[i] - xs[j]
            c2 *= c3
            for k in range(min(i, order), -1, -1):
                prev = c[k - 1][i - 1] if k else 0
                c[k][i] = c1 * (k * prev - xs[i - 1] * c[k][i - 1]) / c2
            for k in range(min(i, order), -1, -1):
                lower = c[k - 1][j] if k else 0
                c[k][j] = (xs[i] * c[k][j] - k * lower) / c3
        c1 = c2
    return c[order]


def central_weights(order: int, accuracy: int = 6) -> dict[int, Fraction]:
    """Central-difference weights on integer offsets, ``accuracy``-th order accurate."""
    radius = (order + 1) // 2 + accuracy // 2 - 1
    offsets = range(-radius, radius + 1)
    return {o: w for o, w in zip(offsets, fornberg_weights(offsets, order)) if w}


def fd_derivative(f, x, order: int, h, accuracy: int = 6, ctx=None):
    """Central finite difference of ``f`` at ``x`` with step ``h``."""
    weights = central_weights(order, accuracy)
    if ctx is None:
        total = math.fsum(float(w) * f(x + o * h) for o, w in weights.items())
        return total / h**order
    total = ctx.fsum(ctx.mpf(w.numerator) / w.denominator * f(x + o * h) for o, w in weights.items())
    return total / h**order


def _grid(lo, hi, count):
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def _result(name, worst, tol, detail="") -> CheckResult:
    status = PASS if worst <= tol else FAIL
    return CheckResult(name, status, deviation=float(worst), detail=detail or f"tol {tol:g}")


def wronskian_check(tol: float = 1e-12, grid=GRID) -> CheckResult:
    worst = max(abs(airy_eval(z).wronskian - 1 / math.pi) for z in _grid(*grid))
    return _result("wronskian", worst, tol)


def ode_check(tol: float = 1e-12, grid=GRID) -> CheckResult:
    worst = 0.0
    for z in _grid(*grid):
        rhs = z * airy_eval(z).ai
        worst = max(worst, abs(dn_airy(2, z, "ai") - rhs) / max(1.0, abs(rhs)))
    return _result("ode_residual", worst, tol)


def genfun_suite(tol: float = 1e-10, N: int = 30, points=GENFUN_POINTS) -> CheckResult:
    worst = max(genfun_check(z, t, N).deviation for z, t in points)
    return _result("generating_functions", worst, tol, f"N={N}, tol {tol:g}")


def kderiv_fd_check(tol: float = 1e-6, nmax: int = 4, zetas=(0.5, 1.0, 2.0, 3.0, 4.0), dps: int = 40) -> CheckResult:
    """Derivative sum of K_{2/3} against 6th-order central differences.

    The differences are taken at ``dps`` digits with a small step so that
    both truncation and rounding sit far below ``tol``.
    """
    ctx = context(dps)
    h = ctx.mpf(10) ** -4
    worst = 0.0
    for zeta in zetas:
        x = ctx.mpf(zeta)
        for n in range(1, nmax + 1):
            ref = fd_derivative(lambda s: bessel_k("2/3", s, dps), x, n, h, ctx=ctx)
            val = kderiv(n, "2/3", zeta)
            worst = max(worst, float(abs(val - ref) / abs(ref)))
    return _result("kderiv_vs_fd", worst, tol, f"n<={nmax}, tol {tol:g}")


def reduce_closure_check(tol: float = 1e-10, zetas=(0.5, 1.0, 2.0, 4.0)) -> CheckResult:
    """Exact K_1/3, K_2/3 reductions for eta in -10/3..-1/3 against the K recurrence."""
    etas = [Fraction(-k, 3) for k in range(10, 0, -1) if k % 3]
    worst = 0.0
    for zeta in zetas:
        kp = k_pair(zeta)
        for eta in etas:
            val = k_as_pair(eta).evaluate(kp.k13, kp.k23, zeta)
            ref = bessel_k(eta, zeta)
            worst = max(worst, abs(val - ref) / abs(ref))
    return _result("reduce_order_closure", worst, tol)


def route_check(tol: float = 1e-8, nmax: int = 10, zs=(0.5, 1.0, 2.0, 3.0)) -> CheckResult:
    worst = 0.0
    for z in zs:
        for n in range(1, nmax + 1):
            ref = dn_airy(n, z, "aip")
            worst = max(worst, abs(dn_aiprime_bessel(n, z) - ref) / abs(ref))
    return _result("bessel_vs_polynomial_route", worst, tol, f"n<={nmax}, tol {tol:g}")


def sigma_suite(tol: float = 1e-7, mmax: int = 8, zs=(0.5, 0.7, 1.0, 2.0, 3.0)) -> CheckResult:
    reports = [sigma_check(m, z) for m in range(1, mmax + 1) for z in zs]
    worst = max(r.max_deviation for r in reports)
    result = _result("sigma_assembly", worst, tol, f"m<={mmax}, tol {tol:g}")
    if result.status == FAIL:
        result.diagnostics = [r.to_dict() for r in reports if r.max_deviation > tol]
    return result


def bessel_exact_checks(nmax: int = 16) -> list[CheckResult]:
    """Exact Bessel/Bell expansion against the recurrence for ``1 <= n <= nmax``.

    The corrected Bell-free sign must reproduce every row.  The typeset
    sign is run too; its odd-n failures are reported as documented.
    """
    bad, printed_bad = [], []
    for n in range(1, nmax + 1):
        if not all(f.ok for f in pq_from_bessel(n)):
            bad.append(n)
        if not all(f.ok for f in pq_from_bessel(n, "printed")):
            printed_bad.append(n)
    out = [CheckResult("bessel_exact_rows", FAIL if bad else PASS, detail=f"n<={nmax}" + (f", mismatched {bad}" if bad else ""))]
    if printed_bad:
        odd_only = all(n % 2 for n in printed_bad)
        out.append(
            CheckResult(
                "bessel_exact_rows_printed_sign",
                DOCUMENTED if odd_only else FAIL,
                detail=f"Bell-free term with (-3 zeta/2)^n fails at n={printed_bad}; (+3 zeta/2)^n reproduces every row",
            )
        )
    return out


def numeric_suite(tol: float | None = None) -> list[CheckResult]:
    """Every numeric check; ``tol`` (if given) caps the route and sigma tolerances."""
    route_tol = 1e-8 if tol is None else tol
    sigma_tol = 1e-7 if tol is None else tol
    return [
        wronskian_check(),
        ode_check(),
        genfun_suite(),
        kderiv_fd_check(),
        reduce_closure_check(),
        route_check(route_tol),
        sigma_suite(sigma_tol),
    ]
