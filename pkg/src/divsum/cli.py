"""Command-line front end.

Subcommands:
  compute  -- one value of one function (sigma, d, sigma_gamma, kronecker,
              log_product), by oracle, identity, eq8/eq9 or series.
  verify   -- sweep n over a range, comparing identity against oracle.
  table    -- emit per-n values of a function over a range.
  bench    -- wall-clock comparison of evaluation methods over a range.
  check    -- Robin / Lagarias inequality sweeps.

Exit status: 0 on success, 1 when verify finds mismatches, 2 on usage
errors.  Output formats: text, json, csv.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from gmpy2 import mpq

from . import applications
from .core import build_sieve
from .identity import (
    GSpec,
    SweepCache,
    divisor_sum_oracle,
    eval_identity,
    render_value,
    values_agree,
)

_FUNCTIONS = ("sigma", "d", "tau", "sigma_gamma", "kronecker", "log_product")


class UsageError(Exception):
    pass


def parse_gspec(text: str) -> GSpec:
    """Parse --g values like power:1, power:0.5, log, mobius."""
    if text == "log":
        return GSpec.log("float")
    if text == "mobius":
        return GSpec.mobius()
    if text.startswith("power:"):
        raw = text.split(":", 1)[1]
        try:
            gamma = float(raw)
        except ValueError:
            raise UsageError(f"bad power exponent {raw!r}") from None
        return GSpec.power(int(gamma) if gamma == int(gamma) else gamma)
    raise UsageError(f"unknown g spec {text!r} (expected power:G, log, or mobius)")


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive range 'a..b'."""
    try:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise UsageError(f"bad range {text!r} (expected a..b)") from None
    if lo < 1 or lo > hi:
        raise UsageError(f"bad range {text!r} (need 1 <= start <= end)")
    return lo, hi


def _format_number(value) -> str:
    if isinstance(value, mpq):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _residual(value, oracle) -> float:
    try:
        return abs(float(value) - float(oracle))
    except (TypeError, OverflowError):
        return 0.0


def _emit(config: dict, rows: list[dict], summary: dict, fmt: str, out) -> None:
    if fmt == "json":
        json.dump({"config": config, "results": rows, "summary": summary}, out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        fields = list(rows[0].keys()) if rows else ["n", "value"]
        writer = csv.DictWriter(out, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    else:
        for row in rows:
            out.write("  ".join(f"{k}={v}" for k, v in row.items()) + "\n")
        out.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")


def _compute_value(func: str, n: int, method: str, gamma, terms: int):
    if func in ("d", "tau"):
        if method in ("eq8", "eq9"):
            return eval_identity(n, GSpec.power(0), method)
        return applications.divisor_count(n, "oracle" if method == "oracle" else "identity")
    if func == "sigma":
        if method == "series":
            return applications.sigma_series_partial(n, terms)
        if method in ("eq8", "eq9"):
            return eval_identity(n, GSpec.power(1), method)
        return applications.sigma(n, "oracle" if method == "oracle" else "identity")
    if func == "sigma_gamma":
        if gamma is None:
            raise UsageError("sigma_gamma requires --gamma")
        if method in ("eq8", "eq9"):
            return eval_identity(n, GSpec.power(gamma), method)
        return applications.sigma_gamma(n, gamma, "oracle" if method == "oracle" else "identity")
    if func == "kronecker":
        return applications.kronecker_delta(n)
    if func == "log_product":
        m = method if method in ("eq13", "eq14") else "eq14"
        return applications.log_product_divisors(n, m)[0]
    raise UsageError(f"unknown function {func!r}")


def _cmd_compute(args, out) -> int:
    value = _compute_value(args.function, args.n, args.method, args.gamma, args.K)
    rendered = _format_number(value)
    if args.format == "json":
        json.dump(
            {
                "config": {"subcommand": "compute", "function": args.function,
                           "n": args.n, "method": args.method},
                "results": [{"n": args.n, "value": rendered}],
                "summary": {"checked": 1, "mismatches": 0},
            },
            out,
        )
        out.write("\n")
    elif args.format == "csv":
        writer = csv.writer(out)
        writer.writerow(["n", "value"])
        writer.writerow([args.n, rendered])
    else:
        out.write(f"{args.function}({args.n}) = {rendered}\n")
    return 0


def _verify_chunk(payload) -> list[dict]:
    g_text, method, lo, hi, tolerance = payload
    g = parse_gspec(g_text)
    tables = build_sieve(hi)
    cache = SweepCache(g, tables)
    rows = []
    for n in range(lo, hi + 1):
        t0 = time.perf_counter()
        value = eval_identity(n, g, method, cache=cache)
        elapsed = time.perf_counter() - t0
        oracle = divisor_sum_oracle(n, g, tables)
        rows.append(
            {
                "n": n,
                "value": render_value(value),
                "oracle": render_value(oracle),
                "agree": values_agree(value, oracle, g.domain, tolerance),
                "_residual": _residual(value, oracle),
                "_elapsed": elapsed,
            }
        )
    return rows


def _cmd_verify(args, out) -> int:
    lo, hi = parse_range(args.range)
    parse_gspec(args.g)  # validate before forking workers
    start = time.perf_counter()
    if args.jobs > 1:
        span = max(1, (hi - lo + 1 + args.jobs - 1) // args.jobs)
        chunks = [
            (args.g, args.method, a, min(a + span - 1, hi), args.tolerance)
            for a in range(lo, hi + 1, span)
        ]
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = [row for part in pool.map(_verify_chunk, chunks) for row in part]
        rows.sort(key=lambda r: r["n"])
    else:
        rows = _verify_chunk((args.g, args.method, lo, hi, args.tolerance))
    elapsed_ms = 1000 * (time.perf_counter() - start)

    mismatches = sum(not r["agree"] for r in rows)
    summary = {
        "checked": len(rows),
        "mismatches": mismatches,
        "max_abs_residual": max((r["_residual"] for r in rows), default=0.0),
        "elapsed_ms": elapsed_ms,
    }
    for r in rows:
        del r["_residual"], r["_elapsed"]
    config = {
        "subcommand": "verify", "g": args.g, "range": args.range,
        "method": args.method, "tolerance": args.tolerance, "jobs": args.jobs,
    }
    _emit(config, rows, summary, args.format, out)
    return 1 if mismatches else 0


def _cmd_table(args, out) -> int:
    lo, hi = parse_range(args.range)
    rows = [
        {"n": n, "value": _format_number(
            _compute_value(args.function, n, args.method, args.gamma, args.K))}
        for n in range(lo, hi + 1)
    ]
    config = {
        "subcommand": "table", "function": args.function,
        "range": args.range, "method": args.method,
    }
    summary = {"checked": len(rows), "mismatches": 0}
    _emit(config, rows, summary, args.format, out)
    return 0


def _cmd_bench(args, out) -> int:
    lo, hi = parse_range(args.range)
    g = parse_gspec(args.g)
    tables = build_sieve(hi)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    rows = []

    def one_pass(method: str) -> float:
        t0 = time.perf_counter()
        for n in range(lo, hi + 1):
            if method == "oracle":
                divisor_sum_oracle(n, g, tables)
            else:
                eval_identity(n, g, method, tables)
        return 1000 * (time.perf_counter() - t0)

    start = time.perf_counter()
    for method in methods:
        if method not in ("oracle", "eq8", "eq9"):
            raise UsageError(f"unknown bench method {method!r}")
        one_pass(method)  # warmup
        times = [one_pass(method) for _ in range(5)]
        rows.append({"method": method, "median_ms": f"{statistics.median(times):.6g}"})
    config = {"subcommand": "bench", "g": args.g, "range": args.range,
              "methods": methods}
    summary = {
        "checked": (hi - lo + 1) * len(methods),
        "mismatches": 0,
        "max_abs_residual": 0.0,
        "elapsed_ms": 1000 * (time.perf_counter() - start),
    }
    _emit(config, rows, summary, args.format, out)
    return 0


def _cmd_check(args, out) -> int:
    lo, hi = parse_range(args.range)
    rows = []
    if args.inequality == "robin":
        if lo < 3:
            raise UsageError("robin check requires range start >= 3")
        sig = applications.sigma_range(hi)
        factor = math.exp(applications.EULER_GAMMA)
        for n in range(lo, hi + 1):
            bound = n * factor * math.log(math.log(n))
            if not sig[n] < bound:
                rows.append({"n": n, "sigma": int(sig[n]), "bound": f"{bound:.17g}"})
    else:
        if lo < 2:
            raise UsageError("lagarias check requires range start >= 2")
        sig = applications.sigma_range(hi)
        h = 0.0
        harm = [0.0] * (hi + 1)
        for i in range(1, hi + 1):
            h += 1.0 / i
            harm[i] = h
        for n in range(lo, hi + 1):
            hn = harm[n]
            bound = hn + math.log(hn) * math.exp(hn)
            if not sig[n] < bound:
                rows.append({"n": n, "sigma": int(sig[n]), "bound": f"{bound:.17g}"})
    config = {"subcommand": "check", "inequality": args.inequality, "range": args.range}
    summary = {"checked": hi - lo + 1, "violations": len(rows)}
    if args.format == "text":
        for row in rows:
            out.write(f"violation at n={row['n']}: sigma={row['sigma']} bound={row['bound']}\n")
        out.write(f"violations: {len(rows)}\n")
    else:
        _emit(config, rows, summary, args.format, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divsum",
        description="Finite-sum identities for divisor-sum arithmetic functions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", help="write results to this file instead of stdout")

    p = sub.add_parser("compute", help="compute one value")
    p.add_argument("function", choices=_FUNCTIONS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", default="identity",
                   choices=("oracle", "identity", "eq8", "eq9", "eq13", "eq14", "series"))
    p.add_argument("--gamma", type=float)
    p.add_argument("--K", type=int, default=20000, help="series truncation index")
    add_common(p)
    p.set_defaults(run=_cmd_compute)

    p = sub.add_parser("verify", help="sweep the identity against the oracle")
    p.add_argument("--g", required=True, help="power:G, log, or mobius")
    p.add_argument("--range", required=True, help="inclusive range a..b of n")
    p.add_argument("--method", default="eq9", choices=("eq8", "eq9"))
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("table", help="tabulate a function over a range")
    p.add_argument("--function", required=True, choices=_FUNCTIONS)
    p.add_argument("--range", required=True)
    p.add_argument("--method", default="identity",
                   choices=("oracle", "identity", "eq8", "eq9", "eq13", "eq14", "series"))
    p.add_argument("--gamma", type=float)
    p.add_argument("--K", type=int, default=20000)
    add_common(p)
    p.set_defaults(run=_cmd_table)

    p = sub.add_parser("bench", help="time evaluation methods over a range")
    p.add_argument("--g", required=True)
    p.add_argument("--range", required=True)
    p.add_argument("--methods", default="oracle,eq8,eq9")
    add_common(p)
    p.set_defaults(run=_cmd_bench)

    p = sub.add_parser("check", help="Robin / Lagarias inequality sweeps")
    p.add_argument("inequality", choices=("robin", "lagarias"))
    p.add_argument("--range", required=True)
    add_common(p)
    p.set_defaults(run=_cmd_check)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", None) is not None and args.n < 1:
        parser.error("--n must be >= 1")
    try:
        if args.output:
            with open(args.output, "w", newline="") as fh:
                return args.run(args, fh)
        if args.format == "csv":
            buf = io.StringIO()
            status = args.run(args, buf)
            sys.stdout.write(buf.getvalue())
            return status
        return args.run(args, sys.stdout)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
