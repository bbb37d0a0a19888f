"""``airy-poly`` command line: tables, point evaluation, verification, Bell and staircase dumps.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from airypoly.abrapoly import (
    IntPolynomial,
    PolyPair,
    even_from_odd,
    p_closed,
    pq_diffdiff,
    pq_recurrence,
    q_closed,
    staircase,
    staircase_checks,
    verify_cross,
)
from airypoly.abrapoly.recurrence import SEEDS
from airypoly.abrapoly.table1 import KNOWN_ERRATA, PRINTED
from airypoly.airynum import DomainError, airy_eval, dn_aiprime_bessel, dn_airy
from airypoly.airynum.checks import bessel_exact_checks, numeric_suite
from airypoly.bellcore import bell_special, delta_b

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3

MAX_TABLE_N = 60
MAX_VERIFY_N = 60
MAX_BELL_N = 64
BESSEL_EXACT_MAX_N = 16

FORMATS = ("plain", "json", "latex", "csv")
DEFAULT_N = {"table": 18, "eval": 0, "verify": 18, "bell": 6, "staircase": 12}


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


# rows <-> records


def _terms(poly: IntPolynomial) -> list:
    return [[e, str(c)] for e, c in poly.terms()]


def row_record(row: PolyPair) -> dict:
    return {"n": row.n, "P": _terms(row.P), "Q": _terms(row.Q)}


def _poly_from(terms) -> IntPolynomial:
    exps = [e for e, _ in terms]
    if exps != sorted(set(exps)):
        raise ValueError("exponents must be strictly increasing")
    return IntPolynomial.from_terms({int(e): int(c) for e, c in terms})


def row_from_record(rec: dict) -> PolyPair:
    return PolyPair(int(rec["n"]), _poly_from(rec["P"]), _poly_from(rec["Q"]))


def format_row(row: PolyPair, fmt: str) -> str:
    if fmt == "json":
        return _dumps(row_record(row))
    if fmt == "csv":
        return f"{row.n},{row.P.to_str(ascending=True)},{row.Q.to_str(ascending=True)}"
    if fmt == "latex":
        return f"${row.n}$ & ${row.P.to_latex()}$ & ${row.Q.to_latex()}$ \\\\ \\hline"
    return f"{row.n} | {row.P.to_str()} | {row.Q.to_str()}"


# row construction


def _closed_rows(N: int, err) -> list[PolyPair]:
    """Rows 0..N from the closed forms; even rows recovered from odd ones."""
    top = N + 3 if N % 2 == 0 else N + 2
    odd: dict[int, PolyPair] = {1: SEEDS[1]}
    for m in range(1, (top - 1) // 2 + 1):
        n = 2 * m + 1
        pc, qc = p_closed(m), q_closed(m)
        for form in (pc, qc):
            for d in form.diagnostics:
                err(f"erratum diagnostic: {_dumps(d.to_dict())}")
        ref = pq_recurrence(n)[n]
        P = pc.polynomial if pc.ok else ref.P
        Q = qc.polynomial if qc.ok else ref.Q
        odd[n] = PolyPair(n, P, Q)
    rows = [SEEDS[0], SEEDS[1]]
    for n in range(2, N + 1):
        rows.append(odd[n] if n % 2 else even_from_odd(n // 2, odd))
    return rows


def _cache_valid(rows: list[PolyPair]) -> bool:
    if not rows or [r.n for r in rows] != list(range(len(rows))) or len(rows) < 3:
        return False
    if any((r.P, r.Q) != (s.P, s.Q) for r, s in zip(rows, SEEDS)):
        return False
    for n in range(1, len(rows) - 2):
        a, b, c = rows[n - 1], rows[n], rows[n + 2]
        if c.P != b.P.shift() + a.P.scale(n) or c.Q != b.Q.shift() + a.Q.scale(n):
            return False
    top = len(rows) - 1
    fresh = pq_recurrence(top)[top]
    return (fresh.P, fresh.Q) == (rows[top].P, rows[top].Q)


def _load_cache(path: Path, err) -> list[PolyPair] | None:
    if not path.exists():
        return None
    try:
        rows = [row_from_record(json.loads(line)) for line in path.read_text().splitlines() if line.strip()]
    except (ValueError, KeyError, TypeError) as exc:
        err(f"cache {path}: unreadable ({exc}); recomputing")
        return None
    if not _cache_valid(rows):
        err(f"cache {path}: failed the checksum row or three-term check; recomputing")
        return None
    return rows


def _build_rows(N: int, method: str, cache: str | None, err) -> list[PolyPair]:
    path = Path(cache) if cache else None
    if path is not None:
        cached = _load_cache(path, err)
        if cached is not None and len(cached) > N:
            return cached[: N + 1]
    if method == "recurrence":
        rows = pq_recurrence(N)
    elif method == "diffdiff":
        rows = pq_diffdiff(N)
    else:
        rows = _closed_rows(N, err)
    if path is not None:
        path.write_text("".join(_dumps(row_record(r)) + "\n" for r in rows))
    return rows


# commands


def cmd_table(args, out, err) -> int:
    N = args.n
    if not 1 <= N <= MAX_TABLE_N:
        raise UsageError(f"table needs 1 <= --n <= {MAX_TABLE_N}")
    rows = _build_rows(N, args.method, args.cache, err)
    if args.format == "csv":
        out("n,P,Q")
    for row in rows[1 : N + 1]:
        out(format_row(row, args.format))
    for (n, col, e), (printed, computed) in sorted(KNOWN_ERRATA.items()):
        if n <= N:
            p_printed = IntPolynomial.from_terms(PRINTED[n][0 if col == "P" else 1])
            err(
                f"note: Table I row {n} prints {col} = {p_printed.to_str(ascending=True)}; "
                f"the recurrence gives coefficient {computed} for z^{e}, not {printed}"
            )
    return EXIT_OK


def _bessel_value(n: int, z: float, which: str) -> float:
    # d^n Ai = d^(n-1) Ai'
    order = n if which == "aip" else n - 1
    if which == "ai" and n < 1:
        raise DomainError("the bessel route needs n >= 1 for --which ai")
    if z <= 0:
        raise DomainError(f"the bessel route needs z > 0, got z={z}")
    if order == 0:
        return airy_eval(z).aip
    return dn_aiprime_bessel(order, z)


def cmd_eval(args, out, err) -> int:
    if args.z is None:
        raise UsageError("eval needs --z")
    if args.n < 0:
        raise UsageError("eval needs --n >= 0")
    if args.route == "poly":
        if args.n > MAX_TABLE_N:
            raise UsageError(f"the poly route supports --n <= {MAX_TABLE_N}")
        value = dn_airy(args.n, args.z, args.which)
    else:
        value = _bessel_value(args.n, args.z, args.which)
    out(f"{value:.15g}")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    N = args.n
    if not 2 <= N <= MAX_VERIFY_N:
        raise UsageError(f"verify needs 2 <= --n <= {MAX_VERIFY_N}")
    start = time.perf_counter()
    report = verify_cross(N)
    checks = list(report.checks)
    checks += staircase_checks()
    checks += bessel_exact_checks(min(N - 1, BESSEL_EXACT_MAX_N))
    checks += numeric_suite(args.tol)
    failed = [c for c in checks if c.status == "fail"]
    payload = {
        "N": N,
        "ok": not failed,
        "tolerance": args.tol,
        "summary": [f"{c.name}: {c.status}" for c in checks],
        "checks": [c.to_dict() for c in checks],
        "seconds": round(time.perf_counter() - start, 3),
    }
    out(json.dumps(payload, indent=2))
    for c in failed:
        err(f"FAIL {c.name}: {c.detail}")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_bell(args, out, err) -> int:
    N = args.n
    if not 0 <= N <= MAX_BELL_N:
        raise UsageError(f"bell needs 0 <= --n <= {MAX_BELL_N}")
    if args.mode == "special":
        rows = [(n, [bell_special(n, k) for k in range(n + 1)]) for n in range(N + 1)]
    else:
        # Delta-B(0, 0) reduces to B(0, 0) = 1
        rows = [(0, [1])] + [(n, [delta_b(n, k) for k in range(n + 1)]) for n in range(1, N + 1)]
    if args.format == "csv":
        out("n,k,value")
    for n, vals in rows:
        if args.format == "json":
            out(_dumps({"n": n, "values": [str(v) for v in vals]}))
        elif args.format == "csv":
            for k, v in enumerate(vals):
                out(f"{n},{k},{v}")
        elif args.format == "latex":
            out(" & ".join([str(n)] + [str(v) for v in vals]) + " \\\\")
        else:
            out(f"{n}: " + " ".join(str(v) for v in vals))
    return EXIT_OK


def cmd_staircase(args, out, err) -> int:
    if args.n < 1:
        raise UsageError("staircase needs --n >= 1")
    rows = [staircase(m) for m in range(1, args.n + 1)]
    fields = ("m", "M", "Mcal", "eps")
    if args.format == "json":
        for r in rows:
            out(_dumps({f: getattr(r, f) for f in fields}))
        return EXIT_OK
    if args.format == "csv":
        out(",".join(fields))
        for r in rows:
            out(f"{r.m},{r.M},{r.Mcal},{r.eps}")
        return EXIT_OK
    if args.format == "latex":
        for r in rows:
            out(f"{r.m} & {r.M} & {r.Mcal} & {r.eps} \\\\")
        return EXIT_OK
    out("m | M | Mcal | eps")
    for r in rows:
        out(f"{r.m} | {r.M} | {r.Mcal} | {r.eps}")
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "bell": cmd_bell,
    "staircase": cmd_staircase,
}


def _finite_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"{text!r} is not a finite number")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="order / row count (command specific)")
    common.add_argument("--z", type=_finite_float, default=None)
    common.add_argument("--t", type=_finite_float, default=None, help="accepted for symmetry; unused by current commands")
    common.add_argument("--format", choices=FORMATS, default="plain")
    common.add_argument("--method", choices=("recurrence", "diffdiff", "closed"), default="recurrence")
    common.add_argument("--route", choices=("poly", "bessel"), default="poly")
    common.add_argument("--which", choices=("ai", "aip"), default="ai")
    common.add_argument("--mode", choices=("special", "delta"), default="special")
    common.add_argument("--tol", type=_finite_float, default=None, help="numeric tolerance for verify")
    common.add_argument("--cache", default=None, metavar="PATH", help="JSON-lines row cache for table")

    parser = argparse.ArgumentParser(prog="airy-poly", description="Polynomials in the derivatives of the Airy functions.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "table": "print rows n = 1..N of P_n, Q_n",
        "eval": "evaluate the n-th derivative of Ai or Ai' at z",
        "verify": "run every exact and numeric cross-check, print a JSON report",
        "bell": "dump Bell values at the double-factorial argument",
        "staircase": "tabulate m, M(m), Mcal(m), eps(m)",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n is None:
        args.n = DEFAULT_N[args.command]

    def out(line: str) -> None:
        print(line)

    def err(line: str) -> None:
        print(line, file=sys.stderr)

    try:
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        err(f"airy-poly: error: {exc}")
        return EXIT_USAGE
    except DomainError as exc:
        err(f"airy-poly: domain error: {exc}")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
