"""Command-line front end.

Subcommands::

    pi        compute pi by one of four methods and grade matched digits
    arctan    evaluate the truncated closed-form arctangent sum
    deriv     evaluate arctan derivatives by one of three routes
    quad      run the corrected midpoint rule on a built-in integrand
    bench     timing/digit tables over the standard ladders
    selftest  quick built-in property checks, nonzero exit on failure

All rational inputs are exact "p/q" or integer strings; decimals are
rejected rather than silently approximated.  JSON output (``--format
json``) emits every numeric field as a decimal string so arbitrary
precision survives the round trip.

Exit codes: 0 success, 2 usage error, 3 domain/precondition error,
4 reference-integrity failure, 1 selftest failure.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .arctan import arctan_closed_form, arctan_derivative_form
from .errors import (
    ComparisonError,
    DomainError,
    OrderError,
    PoleError,
    ReferenceIntegrityError,
)
from .exact import decimal_expand, matching_digits, parse_rational
from .kernels import (
    RationalFunction,
    arctan_deriv,
    arctan_deriv_sine_form,
    deriv_inv_one_minus_u2,
    deriv_inv_one_plus_t2,
    oracle_derivative,
)
from .pi import (
    GAUSS_TERMS,
    METHODS,
    arctan_taylor_reference,
    measure,
    pi_closed_form,
    reference_pi,
)
from .quadrature import (
    ComputationParams,
    integrate_all_orders,
    integrate_even_orders,
    integration_error,
)

LADDER_SIZES = (8, 16, 32, 46)

USAGE_EXIT = 2
DOMAIN_EXIT = 3
INTEGRITY_EXIT = 4


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _capped_workers(requested: int | None) -> int | None:
    """Apply the ARCPI_MAX_WORKERS env cap; None means serial."""
    if requested is None:
        return None
    cap = os.environ.get("ARCPI_MAX_WORKERS")
    if cap is not None:
        requested = min(requested, max(1, int(cap)))
    return requested


def _emit(args: argparse.Namespace, record: dict[str, object],
          text_lines: Sequence[str]) -> None:
    """One report: a JSON object or plain text lines."""
    if args.format == "json":
        print(json.dumps({k: v for k, v in record.items() if v is not None}))
    else:
        for line in text_lines:
            print(line)


def _sizes(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers")
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("sizes must be >= 1")
    return values


# --- pi -------------------------------------------------------------------

def _run_pi(args: argparse.Namespace) -> int:
    params = ComputationParams(args.L, args.M)
    result = measure(args.method, params, args.digits,
                     workers=_capped_workers(args.workers))
    expansion = decimal_expand(result.approx, args.digits)
    _emit(args, {
        "method": result.method,
        "L": str(args.L),
        "M": str(args.M),
        "digits_requested": str(args.digits),
        "approx_decimal": str(expansion),
        "matched_digits": str(result.matched_digits),
        "elapsed_ms": f"{result.elapsed_ms:.3f}",
    }, [
        f"method={result.method} L={args.L} M={args.M}",
        str(expansion),
        f"matched digits: {result.matched_digits}",
        f"elapsed: {result.elapsed_ms:.1f} ms",
    ])
    return 0


# --- arctan ---------------------------------------------------------------

def _run_arctan(args: argparse.Namespace) -> int:
    params = ComputationParams(args.L, args.M)
    start = time.perf_counter()
    value = arctan_closed_form(args.x, params,
                               workers=_capped_workers(args.workers))
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    matched: int | None = None
    if 0 < abs(args.x) < 1:
        reference = arctan_taylor_reference(args.x, args.digits)
        matched = matching_digits(decimal_expand(value, args.digits),
                                  decimal_expand(reference, args.digits))

    if value == 0:
        shown = "0"
    elif args.exact:
        shown = str(value)
    else:
        shown = str(decimal_expand(value, args.digits))

    lines = [shown]
    if matched is not None:
        lines.append(f"matched digits vs series reference: {matched}")
    _emit(args, {
        "x": str(args.x),
        "L": str(args.L),
        "M": str(args.M),
        "digits_requested": str(args.digits),
        "exact": str(value) if args.exact else None,
        "approx_decimal": str(decimal_expand(value, args.digits))
        if value else "0",
        "matched_digits": None if matched is None else str(matched),
        "elapsed_ms": f"{elapsed_ms:.3f}",
    }, lines)
    return 0


# --- deriv ----------------------------------------------------------------

def _deriv_value(formula: str, m: int, t: Fraction) -> Fraction | float:
    if formula == "eq7":
        return arctan_deriv(m, t)
    if formula == "eq2":
        return arctan_deriv_sine_form(m, float(t))
    # quotient rule on the kernel; order shifts down by one for arctan
    if m < 1:
        raise OrderError("arctan derivatives need order >= 1")
    return oracle_derivative(
        m - 1, RationalFunction.one_over_one_plus_square(), t)


def _run_deriv(args: argparse.Namespace) -> int:
    value = _deriv_value(args.formula, args.m, args.t)
    record: dict[str, object] = {
        "m": str(args.m),
        "t": str(args.t),
        "formula": args.formula,
        "value": str(value),
    }
    lines = [str(value)]
    if args.compare:
        other = _deriv_value(args.compare, args.m, args.t)
        if isinstance(value, Fraction) and isinstance(other, Fraction):
            deviation: object = value - other
        else:
            deviation = abs(float(value) - float(other))
        record["compare"] = args.compare
        record["deviation"] = str(deviation)
        lines.append(f"deviation vs {args.compare}: {deviation}")
    _emit(args, record, lines)
    return 0


# --- quad -----------------------------------------------------------------

def _monomial_oracle(degree: int) -> Callable[[int, Fraction], Fraction]:
    def f(m: int, t: Fraction) -> Fraction:
        if m > degree:
            return Fraction(0)
        coeff = factorial(degree) // factorial(degree - m)
        return coeff * t ** (degree - m)
    return f


def _run_quad(args: argparse.Namespace) -> int:
    params = ComputationParams(args.L, args.M)
    if args.integrand == "kernel":
        f = deriv_inv_one_plus_t2
        label = "1/(1+t^2)"
        truth = None
    else:
        f = _monomial_oracle(args.degree)
        label = f"t^{args.degree}"
        truth = Fraction(1, args.degree + 1)
    rule = integrate_all_orders if args.rule == "eq9" else integrate_even_orders
    value = rule(f, params)
    shown = str(value) if args.exact else str(decimal_expand(value, args.digits))
    lines = [f"rule={args.rule} integrand={label} L={args.L} M={args.M}",
             shown]
    record: dict[str, object] = {
        "rule": args.rule,
        "integrand": label,
        "L": str(args.L),
        "M": str(args.M),
        "value": str(value) if args.exact
        else str(decimal_expand(value, args.digits)),
    }
    if truth is not None:
        error = integration_error(f, params, truth)
        record["exact_integral"] = str(truth)
        record["abs_error"] = str(error)
        lines.append(f"exact integral: {truth}")
        lines.append(f"abs error: {error}")
    _emit(args, record, lines)
    return 0


# --- bench ----------------------------------------------------------------

def _median_ms(fn: Callable[[], object], repetitions: int) -> float:
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter()
        fn()
        samples.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(samples)


def _bench_pi_ladder(args: argparse.Namespace) -> list[dict[str, str]]:
    rows = []
    for size in args.sizes:
        params = ComputationParams(size, size)
        for method in ("eq17", "eq18", "gauss"):
            result = measure(method, params, args.digits)
            elapsed = _median_ms(
                lambda m=method, p=params: measure(m, p, args.digits),
                args.repetitions) if args.repetitions > 1 else result.elapsed_ms
            rows.append({
                "method": method,
                "L": str(size),
                "M": str(size),
                "matched_digits": str(result.matched_digits),
                "elapsed_ms": f"{elapsed:.3f}",
            })
    return rows


def _bench_deriv_paths(args: argparse.Namespace) -> list[dict[str, str]]:
    """Closed-form kernel derivatives vs the quotient-rule oracle.

    Both paths produce every g(l, m) = (d/dt)^m 1/(1+t^2) at the midpoint
    nodes; values are asserted identical, only the clock differs.
    """
    size = args.sizes[-1]
    params = ComputationParams(size, size)
    nodes = [Fraction(2 * ell - 1, 2 * params.L)
             for ell in range(1, params.L + 1)]

    def closed() -> list[Fraction]:
        return [deriv_inv_one_plus_t2(m, t)
                for m in range(params.M + 1) for t in nodes]

    def oracle() -> list[Fraction]:
        out = []
        f = RationalFunction.one_over_one_plus_square()
        for m in range(params.M + 1):
            if m:
                f = f.derivative()
            out.extend(f.evaluate(t) for t in nodes)
        return out

    if closed() != oracle():
        raise AssertionError("derivative paths disagree (arithmetic bug)")
    rows = []
    for name, fn in (("eq5", closed), ("oracle", oracle)):
        rows.append({
            "method": name,
            "L": str(params.L),
            "M": str(params.M),
            "elapsed_ms": f"{_median_ms(fn, args.repetitions):.3f}",
        })
    return rows


def _run_bench(args: argparse.Namespace) -> int:
    rows = (_bench_pi_ladder(args) if args.suite == "pi-ladder"
            else _bench_deriv_paths(args))
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
        return 0
    header = list(rows[0])
    widths = [max(len(h), *(len(r[h]) for r in rows)) for h in header]
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(row[h].ljust(w) for h, w in zip(header, widths)))
    return 0


# --- selftest -------------------------------------------------------------

def _selftest_checks() -> list[tuple[str, Callable[[], None]]]:
    def paths_agree() -> None:
        from .pi import pi_derivative_form
        for L in (1, 2, 3):
            for M in range(5):
                p = ComputationParams(L, M)
                assert pi_closed_form(p) == pi_derivative_form(p), (L, M)

    def arctan_paths_agree() -> None:
        for x in (Fraction(1, 5), Fraction(-1), Fraction(1)):
            p = ComputationParams(2, 3)
            assert arctan_closed_form(x, p) == arctan_derivative_form(x, p), x

    def kernels_match_oracle() -> None:
        plus = RationalFunction.one_over_one_plus_square()
        minus = RationalFunction.one_over_one_minus_square()
        for m in range(9):
            for t in (Fraction(0), Fraction(1, 3), Fraction(-2, 5)):
                assert deriv_inv_one_plus_t2(m, t) == \
                    oracle_derivative(m, plus, t), (m, t)
                assert deriv_inv_one_minus_u2(m, t) == \
                    oracle_derivative(m, minus, t), (m, t)
            if m >= 1:
                t = Fraction(1, 3)
                assert arctan_deriv(m, t) == \
                    oracle_derivative(m - 1, plus, t), m

    def sine_form_agrees() -> None:
        grid = (Fraction(0), Fraction(1, 3), Fraction(-1, 3),
                Fraction(7, 4), Fraction(-7, 4))
        for m in range(1, 11):
            for t in grid:
                if t == 0 and m % 2 == 0:
                    continue  # derivative is exactly 0 there; no scale
                exact = float(arctan_deriv(m, t))
                approx = arctan_deriv_sine_form(m, float(t))
                deviation = abs(approx - exact) / max(1.0, abs(exact))
                assert deviation <= 1e-10, (m, t)

    def quadrature_exact_on_polynomials() -> None:
        p = ComputationParams(3, 6)
        for d in range(p.M + 1):
            f = _monomial_oracle(d)
            assert integrate_all_orders(f, p) == Fraction(1, d + 1), d
            assert integrate_even_orders(f, p) == Fraction(1, d + 1), d

    def rules_agree() -> None:
        p = ComputationParams(2, 4)
        assert integrate_all_orders(deriv_inv_one_plus_t2, p) == \
            integrate_even_orders(deriv_inv_one_plus_t2, p)

    def midpoint_reduction() -> None:
        f = _monomial_oracle(3)
        plain = sum(Fraction(2 * ell - 1, 8) ** 3 for ell in (1, 2, 3, 4))
        plain /= 4
        for M in (0, 1):
            assert integrate_even_orders(f, ComputationParams(4, M)) == plain

    def reference_integrity() -> None:
        reference_pi(150)  # raises ReferenceIntegrityError on any mismatch

    def gauss_terms_identity() -> None:
        total = 4 * sum(
            mult * arctan_taylor_reference(Fraction(1, recip), 60)
            for mult, recip in GAUSS_TERMS)
        ref = reference_pi(60)
        got = decimal_expand(total, 60)
        assert matching_digits(got, ref) >= 55, matching_digits(got, ref)

    def parallel_matches_serial() -> None:
        p = ComputationParams(8, 8)
        assert pi_closed_form(p) == pi_closed_form(p, workers=2)

    return [
        ("pi paths identical on grid", paths_agree),
        ("arctan paths identical", arctan_paths_agree),
        ("kernel closed forms match oracle", kernels_match_oracle),
        ("sine form within 1e-10", sine_form_agrees),
        ("quadrature exact on polynomials", quadrature_exact_on_polynomials),
        ("both rules agree on even grid", rules_agree),
        ("plain midpoint at M <= 1", midpoint_reduction),
        ("reference digits verified", reference_integrity),
        ("nine-term combination hits reference", gauss_terms_identity),
        ("parallel equals serial", parallel_matches_serial),
    ]


def _run_selftest(args: argparse.Namespace) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            check()
        except Exception as exc:  # report every failure, keep going
            failures += 1
            print(f"FAIL {name}: {exc!r}")
        else:
            print(f"ok   {name}")
    if failures:
        print(f"{failures} check(s) failed", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcpi",
        description="Exact-arithmetic arctangent sums, derivative-corrected "
                    "midpoint quadrature, and pi digit experiments.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    def add_params(p: argparse.ArgumentParser, L: int, M: int) -> None:
        p.add_argument("-L", type=_positive_int, default=L,
                       help=f"subinterval count (default {L})")
        p.add_argument("-M", type=int, default=M,
                       help=f"highest correction order (default {M})")

    p = sub.add_parser("pi", help="compute pi and grade digits")
    p.add_argument("--method", choices=METHODS, default="eq17",
                   help="eq17: closed-form sum at 1; eq18: corrected "
                        "midpoint rule on 4/(1+t^2); gauss: nine-term "
                        "combination; machin: two-term reference")
    add_params(p, 46, 46)
    p.add_argument("--digits", type=_positive_int, default=400)
    p.add_argument("--workers", type=_positive_int, default=None)
    add_format(p)
    p.set_defaults(run=_run_pi)

    p = sub.add_parser("arctan", help="truncated closed-form arctangent")
    p.add_argument("--x", type=_rational, required=True,
                   help="argument as 'p/q' or integer")
    add_params(p, 8, 8)
    p.add_argument("--digits", type=_positive_int, default=30)
    p.add_argument("--exact", action="store_true",
                   help="print the exact rational instead of decimals")
    p.add_argument("--workers", type=_positive_int, default=None)
    add_format(p)
    p.set_defaults(run=_run_arctan)

    p = sub.add_parser("deriv", help="arctan derivative evaluators")
    p.add_argument("-m", type=int, required=True, help="derivative order")
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--formula", choices=("eq7", "eq2", "oracle"),
                   default="eq7",
                   help="eq7: exact complex-pair form; eq2: floating "
                        "sine/arcsine form; oracle: quotient rule")
    p.add_argument("--compare", choices=("eq7", "eq2", "oracle"),
                   default=None, help="also print deviation vs this formula")
    add_format(p)
    p.set_defaults(run=_run_deriv)

    p = sub.add_parser("quad", help="derivative-corrected midpoint rule")
    p.add_argument("--integrand", choices=("kernel", "monomial"),
                   default="kernel",
                   help="kernel: 1/(1+t^2); monomial: t^degree")
    p.add_argument("--degree", type=int, default=3,
                   help="monomial degree (default 3)")
    add_params(p, 5, 5)
    p.add_argument("--rule", choices=("eq9", "eq10"), default="eq9",
                   help="eq9: all orders; eq10: even orders only")
    p.add_argument("--digits", type=_positive_int, default=30)
    p.add_argument("--exact", action="store_true")
    add_format(p)
    p.set_defaults(run=_run_quad)

    p = sub.add_parser("bench", help="timing and digit tables")
    p.add_argument("--suite", choices=("pi-ladder", "deriv-paths"),
                   required=True)
    p.add_argument("--repetitions", type=_positive_int, default=1)
    p.add_argument("--sizes", type=_sizes,
                   default=LADDER_SIZES,
                   help="comma-separated L=M sizes "
                        "(default 8,16,32,46; deriv-paths uses the last)")
    p.add_argument("--digits", type=_positive_int, default=400)
    add_format(p)
    p.set_defaults(run=_run_bench)

    p = sub.add_parser("selftest", help="built-in property checks")
    add_format(p)
    p.set_defaults(run=_run_selftest)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ReferenceIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INTEGRITY_EXIT
    except (OrderError, DomainError, PoleError, ComparisonError,
            ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
