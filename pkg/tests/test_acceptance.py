"""Acceptance criteria, one test each, at the stated tolerances and time limits.

Caches are cleared before every timed criterion so the limits are measured
from a cold start.  Each criterion records a PASS/FAIL line which
``conftest.py`` prints in the terminal summary; run this file directly to
print the lines without pytest.
"""

from __future__ import annotations

import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from airypoly.abrapoly import (
    IntPolynomial,
    even_from_odd,
    p_closed,
    pq_diffdiff,
    pq_recurrence,
    q_closed,
    staircase,
    table1_check,
)
from airypoly.abrapoly.coefficients import c_coeff
from airypoly.abrapoly.recurrence import _recurrence_rows
from airypoly.abrapoly.table1 import PRINTED
from airypoly.airynum.checks import (
    genfun_suite,
    kderiv_fd_check,
    ode_check,
    reduce_closure_check,
    route_check,
    sigma_suite,
    wronskian_check,
)
from airypoly.bellcore import bell_gf_coefficient, bell_partial, default_table, delta_b, special_argument
from airypoly.exactnum import binomial, double_factorial

RESULTS: list[str] = []


def _cold():
    _recurrence_rows.cache_clear()
    c_coeff.cache_clear()
    default_table.cache_clear()


@contextmanager
def criterion(name: str, limit: float | None = None):
    _cold()
    start = time.perf_counter()
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            detail = f"took {elapsed:.3f}s, limit {limit}s"
            raise AssertionError(detail)
    except AssertionError as exc:
        RESULTS.append(f"FAIL  {name}  {detail or exc}")
        raise
    elapsed = time.perf_counter() - start
    budget = f" (limit {limit}s)" if limit is not None else ""
    RESULTS.append(f"PASS  {name}  {elapsed:.3f}s{budget}")


def test_table1_reproduction():
    with criterion("Table-I reproduction, n=1..18, row 14 Q documented", 0.1):
        rows = pq_recurrence(18)
        for n, (p, q) in PRINTED.items():
            assert rows[n].P == IntPolynomial.from_terms(p), f"row {n} P"
            if n != 14:
                assert rows[n].Q == IntPolynomial.from_terms(q), f"row {n} Q"
        assert rows[14].Q == IntPolynomial.from_terms({2: 2520, 5: 42})
        documented = table1_check(rows)
        assert [(d.name, d.status) for d in documented] == [("table1_row14_Q", "documented-discrepancy")]
        assert documented[0].diagnostics[0]["printed"] == "4228"


def test_route_equivalence():
    with criterion("Route equivalence n<=60, even rows from odd rows", 1.0):
        rec, dd = pq_recurrence(63), pq_diffdiff(60)
        for n in range(61):
            assert (rec[n].P, rec[n].Q) == (dd[n].P, dd[n].Q), n
        for m in range(1, 31):
            pair = even_from_odd(m, rec)  # raises on a nonzero remainder
            assert (pair.P, pair.Q) == (rec[2 * m].P, rec[2 * m].Q), 2 * m


def test_closed_form_leading_structure():
    with criterion("Closed-form leading structure m<=12", 1.0):
        for m in range(1, 13):
            assert p_closed(m).terms.get(m - 1) == m * m, m
            q = q_closed(m).terms
            assert q.get(m) == 1, m
            assert q.get(m - 3, 0) == binomial(m, 3) * (3 * m + 1), m


def test_closed_form_full_rows():
    with criterion("Closed-form full rows m<=8 (diagnostics as data)", 5.0):
        rows = pq_recurrence(17)
        total = 0
        for m in range(1, 9):
            for form, ref in ((p_closed(m), rows[2 * m + 1].P), (q_closed(m), rows[2 * m + 1].Q)):
                for d in form.diagnostics:
                    assert d.reference == ref.coeff(d.exponent)
                total += len(form.diagnostics)
                if m <= 3:
                    assert not form.diagnostics, form.label
        assert total == 0, f"{total} erratum diagnostics"


def test_bell_oracle_equivalence():
    with criterion("Bell recurrence = generating function, n<=12, 21 sequences", 2.0):
        rng = random.Random(2024)
        sequences = [special_argument(12)]
        for _ in range(20):
            sequences.append([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(12)])
        for xs in sequences:
            for n in range(13):
                for k in range(n + 1):
                    assert bell_partial(n, k, xs) == bell_gf_coefficient(n, k, xs), (n, k)


def test_delta_b_identities():
    with criterion("Delta-B identities m<=15"):
        for m in range(1, 16):
            assert delta_b(2 * m, 0) == 0
            assert delta_b(2 * m, 1) == -5 * double_factorial(4 * m - 7)
            assert delta_b(2 * m, 2 * m - 1) == 2 * m * m + 3 * m


def test_wronskian_and_ode():
    with criterion("Wronskian and ODE on 200 points in [-3, 5], 1e-12"):
        for result in (wronskian_check(1e-12), ode_check(1e-12)):
            assert result.status == "pass", f"{result.name} deviation {result.deviation:.3e}"


def test_generating_functions():
    with criterion("Generating functions N=30, 1e-10", 1.0):
        result = genfun_suite(1e-10, N=30)
        assert result.status == "pass", f"deviation {result.deviation:.3e}"


def test_bessel_derivative_and_reduction_closures():
    with criterion("K derivative sum vs finite differences 1e-6, order reduction closure 1e-10"):
        fd = kderiv_fd_check(1e-6)
        assert fd.status == "pass", f"kderiv deviation {fd.deviation:.3e}"
        red = reduce_closure_check(1e-10)
        assert red.status == "pass", f"reduction deviation {red.deviation:.3e}"


def test_bessel_route_and_sigma():
    with criterion("Bessel/Bell route vs polynomial route 1e-8, sigma assembly 1e-7", 5.0):
        route = route_check(1e-8)
        assert route.status == "pass", f"route deviation {route.deviation:.3e}"
        sig = sigma_suite(1e-7, mmax=8)
        assert sig.status == "pass", f"sigma deviation {sig.deviation:.3e}"


def test_staircase_laws():
    with criterion("Staircase laws m<=100"):
        prev = None
        for m in range(1, 101):
            s = staircase(m)
            assert s.eps in (0, 1, 2)
            assert staircase(m + 3).eps == s.eps
            assert s.Mcal == m - 1 - s.M
            if prev is not None:
                step = s.Mcal - prev.Mcal
                assert step == (1 if (m - 1) % 3 == 0 else 0), m
            prev = s
        assert math.ceil(2 * 99 / 3) == staircase(100).M


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    raise SystemExit(1 if failed else 0)
