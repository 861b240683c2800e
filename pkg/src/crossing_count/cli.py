"""Batch command-line front end.

Subcommands: count (exact structure counts), table (subexponential
factor table), growth (radius, dominant singularity, growth rate),
asym (asymptotic vs exact factor at one n), verify (generating-function
identity checks), oracle (brute-force enumeration), roots (quartic
solver).  Output is text, CSV (RFC-4180-ish, header row, LF endings) or
JSON; exact counts are always serialized as decimal strings, never as
floating point.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
refusal.  A persistent count cache (CSV: kind,k,n,ell,value) can be
given via --cache or the CROSSING_COUNT_CACHE environment variable; it
is append-only, validated on load, and ignored with a warning when
corrupt, since every entry is re-derivable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from fractions import Fraction

from . import asymptotics, oracle, powerseries, structures

CACHE_ENV_VAR = "CROSSING_COUNT_CACHE"
CACHE_HEADER = ["kind", "k", "n", "ell", "value"]
_CACHE_KINDS = frozenset({"f", "T", "S", "lambda"})

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CountCache:
    """Append-only CSV store of exact counts, keyed (kind, k, n, ell)."""

    def __init__(self, path: str):
        self.path = path
        self.entries: dict[tuple[str, int, int, int | None], int] = {}
        self._needs_rewrite = False
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        try:
            with open(self.path, newline="") as fh:
                reader = csv.reader(fh)
                header = next(reader, None)
                if header != CACHE_HEADER:
                    raise ValueError(f"bad header {header!r}")
                for row in reader:
                    kind, k, n, ell, value = row
                    if kind not in _CACHE_KINDS:
                        raise ValueError(f"unknown kind {kind!r}")
                    key = (kind, int(k), int(n), int(ell) if ell else None)
                    self.entries[key] = int(value)
        except (OSError, ValueError, csv.Error) as exc:
            print(
                f"warning: ignoring corrupt cache {self.path}: {exc}",
                file=sys.stderr,
            )
            self.entries = {}
            self._needs_rewrite = True

    def get(self, kind: str, k: int, n: int, ell: int | None = None) -> int | None:
        return self.entries.get((kind, k, n, ell))

    def put(self, kind: str, k: int, n: int, ell: int | None, value: int) -> None:
        key = (kind, k, n, ell)
        if key in self.entries:
            return
        self.entries[key] = value
        fresh = self._needs_rewrite or not os.path.exists(self.path)
        mode = "w" if self._needs_rewrite else "a"
        with open(self.path, mode, newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            if fresh:
                writer.writerow(CACHE_HEADER)
                for (kd, kk, nn, el), val in sorted(
                    self.entries.items(), key=lambda item: str(item[0])
                ):
                    writer.writerow([kd, kk, nn, "" if el is None else el, val])
            else:
                writer.writerow([kind, k, n, "" if ell is None else ell, value])
        self._needs_rewrite = False


def _open_cache(args) -> CountCache | None:
    path = args.cache or os.environ.get(CACHE_ENV_VAR)
    return CountCache(path) if path else None


def _structure_count(k: int, n: int, ell: int | None, cache: CountCache | None) -> int:
    if cache is not None:
        hit = cache.get("S", k, n, ell)
        if hit is not None:
            return hit
    value = structures.s_k3(k, n) if ell is None else structures.s_k3_by_isolated(k, n, ell)
    if cache is not None:
        cache.put("S", k, n, ell, value)
    return value


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _csv_writer() -> csv.writer:
    return csv.writer(sys.stdout, lineterminator="\n")


def _sci(x: float, digits: int) -> str:
    return f"{x:.{digits - 1}e}"


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------- count

def cmd_count(args) -> int:
    if args.k < 3:
        return _fail_usage(f"count needs --k >= 3, got {args.k}")
    if args.n < 0:
        return _fail_usage(f"count needs --n >= 0, got {args.n}")
    if args.ell is not None and not 0 <= args.ell <= args.n:
        return _fail_usage(f"need 0 <= ell <= n, got ell={args.ell}")
    cache = _open_cache(args)
    value = _structure_count(args.k, args.n, args.ell, cache)
    if args.format == "json":
        _emit_json({"k": args.k, "n": args.n, "ell": args.ell, "count": str(value)})
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["k", "n", "ell", "count"])
        writer.writerow([args.k, args.n, "" if args.ell is None else args.ell, value])
    else:
        print(value)
    return EXIT_OK


# ---------------------------------------------------------------- table

def _table_rows(args, cache):
    base = args.base
    if args.computed_base:
        base = asymptotics.compute_rho(3, Fraction(1, 4)).growth_rate
    rows = []
    for n in range(args.step, args.n_max + 1, args.step):
        count = _structure_count(3, n, None, cache)
        exact = asymptotics._scaled_count(count, base, n)
        asym = asymptotics.subexp_factor(n) if n >= 5 else None
        rows.append((n, exact, asym))
    return base, rows


def cmd_table(args) -> int:
    if args.step < 1 or args.n_max < args.step:
        return _fail_usage(f"need n_max >= step >= 1, got n_max={args.n_max}, step={args.step}")
    if args.base <= 0:
        return _fail_usage(f"base must be positive, got {args.base}")
    cache = _open_cache(args)
    base, rows = _table_rows(args, cache)
    if args.format == "json":
        _emit_json(
            {
                "base": f"{base:.10g}",
                "rows": [
                    {
                        "n": n,
                        "exact_factor": _sci(exact, 6),
                        "asymptotic_factor": None if asym is None else _sci(asym, 6),
                    }
                    for n, exact, asym in rows
                ],
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["n", "exact_factor", "asymptotic_factor"])
        for n, exact, asym in rows:
            writer.writerow([n, _sci(exact, 6), "" if asym is None else _sci(asym, 6)])
    else:
        digits = args.digits
        print(f"base = {base:.10g}")
        print(f"{'n':>6}  {'exact':>14}  {'asymptotic':>14}")
        for n, exact, asym in rows:
            right = "-" if asym is None else _sci(asym, digits)
            print(f"{n:>6}  {_sci(exact, digits):>14}  {right:>14}")
    return EXIT_OK


# ---------------------------------------------------------------- growth

def cmd_growth(args) -> int:
    if args.k < 3:
        return _fail_usage(f"growth needs --k >= 3, got {args.k}")
    if args.k == 3:
        radius_exact = True
        radius = Fraction(1, 4)
        radius_error = 0.0
    else:
        radius_exact = False
        n_max = args.n_max if args.n_max is not None else 40
        if n_max < 10:
            return _fail_usage(f"growth needs --n-max >= 10, got {n_max}")
        estimate = asymptotics.estimate_rk(args.k, n_max)
        radius = estimate.value
        radius_error = estimate.error
    report = asymptotics.compute_rho(args.k, radius)
    sing = asymptotics.singularities_for_radius(report.radius)
    if args.format == "json":
        _emit_json(
            {
                "k": args.k,
                "r_k": report.radius,
                "r_k_exact": radius_exact,
                "r_k_error": radius_error,
                "rho": report.rho,
                "growth_rate": report.growth_rate,
                "residual": report.residual,
                "singularities": [{"re": z.real, "im": z.imag} for z in sing],
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["quantity", "value_re", "value_im"])
        writer.writerow(["r_k", f"{report.radius:.12g}", ""])
        writer.writerow(["rho", f"{report.rho:.12g}", ""])
        writer.writerow(["growth_rate", f"{report.growth_rate:.12g}", ""])
        writer.writerow(["residual", f"{report.residual:.3e}", ""])
        for i, z in enumerate(sing, 1):
            writer.writerow([f"singularity_{i}", f"{z.real:.12g}", f"{z.imag:.12g}"])
    else:
        kind = "exact" if radius_exact else f"estimated +- {radius_error:.1e}"
        print(f"k = {args.k}")
        print(f"r_k = {report.radius:.10g} ({kind})")
        print(f"rho_k = {report.rho:.10f}")
        print(f"growth rate 1/rho_k = {report.growth_rate:.10f}")
        print(f"residual |theta(rho)-r_k| = {report.residual:.3e}")
        print("induced singularities:")
        for z in sorted(sing, key=lambda w: (round(w.real, 9), w.imag)):
            print(f"  {z.real:+.6f} {z.imag:+.6f}i")
    return EXIT_OK


# ---------------------------------------------------------------- asym

def cmd_asym(args) -> int:
    if args.n < 0:
        return _fail_usage(f"asym needs --n >= 0, got {args.n}")
    base = args.base
    if args.computed_base:
        base = asymptotics.compute_rho(3, Fraction(1, 4)).growth_rate
    cache = _open_cache(args)
    count = _structure_count(3, args.n, None, cache)
    exact = asymptotics._scaled_count(count, base, args.n)
    estimate = asymptotics.asymptotic_estimate(args.n, base) if args.n >= 5 else None
    payload = {
        "n": args.n,
        "base": f"{base:.10g}",
        "count": str(count),
        "exact_factor": _sci(exact, 6),
        "asymptotic_factor": None if estimate is None else _sci(estimate.subexponential, 6),
        "asymptotic_count_log10": None if estimate is None else f"{estimate.full_log10:.6f}",
        "ratio": None if estimate is None else f"{exact / estimate.subexponential:.6f}",
    }
    if args.n_max is not None:
        report = asymptotics.estimate_kprime(args.n_max)
        payload["kprime_raw"] = f"{report.raw_last:.6f}"
        payload["kprime_estimate"] = f"{report.estimate:.6f}"
        payload["kprime_n_max"] = args.n_max
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        writer = _csv_writer()
        keys = list(payload)
        writer.writerow(keys)
        writer.writerow(["" if payload[key] is None else payload[key] for key in keys])
    else:
        for key, value in payload.items():
            print(f"{key} = {'-' if value is None else value}")
    return EXIT_OK


# ---------------------------------------------------------------- verify

def _verification_reports(which: str, k: int, order: int | None):
    default_order = 30 if k == 3 else 20
    bessel_order = 16 if k == 3 else 12
    reports = []
    if which in ("laplace", "all"):
        reports.append(powerseries.verify_laplace_identity(k, order or default_order))
    if which in ("functional", "all"):
        reports.append(powerseries.verify_functional_equation(k, order or default_order))
    if which in ("phi", "all"):
        for n in range(6):
            reports.append(powerseries.verify_phi_identity(n, order or 15))
    if which in ("bessel", "all"):
        reports.append(powerseries.verify_bessel_egf(k, order or bessel_order))
    return reports


def cmd_verify(args) -> int:
    if args.k < 3:
        return _fail_usage(f"verify needs --k >= 3, got {args.k}")
    if args.order is not None and args.order < 1:
        return _fail_usage(f"verify needs --order >= 1, got {args.order}")
    reports = _verification_reports(args.which, args.k, args.order)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        _emit_json(
            {
                "ok": ok,
                "checks": [
                    {
                        "name": r.name,
                        "order": r.order,
                        "ok": r.ok,
                        "first_mismatch": r.first_mismatch,
                    }
                    for r in reports
                ],
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["name", "order", "ok", "first_mismatch"])
        for r in reports:
            writer.writerow(
                [r.name, r.order, r.ok, "" if r.first_mismatch is None else r.first_mismatch]
            )
    else:
        for r in reports:
            print(r.describe())
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------- oracle

def cmd_oracle(args) -> int:
    if args.n < 0:
        return _fail_usage(f"oracle needs --n >= 0, got {args.n}")
    if args.k < 2:
        return _fail_usage(f"oracle needs --k >= 2, got {args.k}")
    if args.min_arc < 1:
        return _fail_usage(f"oracle needs --min-arc >= 1, got {args.min_arc}")
    spec = oracle.EnumSpec(
        n=args.n,
        max_crossing=args.k,
        min_arc_length=args.min_arc,
        by_isolated=args.by_isolated,
        budget=args.budget,
    )
    rng = random.Random(args.shuffle_seed) if args.shuffle_seed is not None else None
    result = oracle.enumerate_count(spec, branch_rng=rng)
    if args.by_isolated:
        items = sorted(result.items())
        if args.format == "json":
            _emit_json(
                {
                    "n": args.n,
                    "k": args.k,
                    "min_arc_length": args.min_arc,
                    "histogram": {str(ell): str(cnt) for ell, cnt in items},
                    "total": str(sum(result.values())),
                }
            )
        elif args.format == "csv":
            writer = _csv_writer()
            writer.writerow(["ell", "count"])
            for ell, cnt in items:
                writer.writerow([ell, cnt])
        else:
            for ell, cnt in items:
                print(f"{ell} {cnt}")
    else:
        if args.format == "json":
            _emit_json(
                {
                    "n": args.n,
                    "k": args.k,
                    "min_arc_length": args.min_arc,
                    "count": str(result),
                }
            )
        elif args.format == "csv":
            writer = _csv_writer()
            writer.writerow(["n", "k", "min_arc_length", "count"])
            writer.writerow([args.n, args.k, args.min_arc, result])
        else:
            print(result)
    return EXIT_OK


# ---------------------------------------------------------------- roots

def cmd_roots(args) -> int:
    try:
        problem = asymptotics.QuarticProblem(*args.coeffs)
    except ValueError as exc:
        return _fail_usage(str(exc))
    roots = sorted(
        asymptotics.solve_quartic(problem), key=lambda z: (round(z.real, 12), z.imag)
    )
    if args.format == "json":
        _emit_json(
            {
                "coefficients": list(args.coeffs),
                "roots": [
                    {"re": z.real, "im": z.imag, "residual": problem.residual(z)}
                    for z in roots
                ],
            }
        )
    elif args.format == "csv":
        writer = _csv_writer()
        writer.writerow(["re", "im", "residual"])
        for z in roots:
            writer.writerow([f"{z.real:.15g}", f"{z.imag:.15g}", f"{problem.residual(z):.3e}"])
    else:
        for z in roots:
            print(f"{z.real:+.12f} {z.imag:+.12f}i   residual {problem.residual(z):.3e}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_common(parser: argparse.ArgumentParser, cache: bool = False) -> None:
    parser.add_argument(
        "--format", choices=("text", "csv", "json"), default="text", help="output format"
    )
    if cache:
        parser.add_argument(
            "--cache",
            default=None,
            help=f"persistent count cache path (default: ${CACHE_ENV_VAR})",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossing-count",
        description="Exact counts and growth constants of k-noncrossing "
        "structures with minimum arc length 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact structure count S_{k,3}(n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=None, help="fix the number of isolated vertices")
    _add_common(p, cache=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="subexponential factor table for k = 3")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--step", type=int, default=10)
    p.add_argument("--base", type=float, default=asymptotics.GROWTH_RATE_K3)
    p.add_argument(
        "--computed-base",
        action="store_true",
        help="use the computed growth rate 1/rho_3 instead of --base",
    )
    p.add_argument("--digits", type=int, default=4, help="significant digits in text output")
    _add_common(p, cache=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("growth", help="radius, dominant singularity and growth rate")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=None, help="ratio-extrapolation depth for k > 3")
    _add_common(p)
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("asym", help="asymptotic vs exact subexponential factor at n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--base", type=float, default=asymptotics.GROWTH_RATE_K3)
    p.add_argument("--computed-base", action="store_true")
    p.add_argument(
        "--n-max", type=int, default=None, help="also estimate the prefactor limit up to n-max"
    )
    _add_common(p, cache=True)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("verify", help="check the generating-function identities")
    p.add_argument(
        "--which",
        choices=("laplace", "functional", "phi", "bessel", "all"),
        default="all",
    )
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--order", type=int, default=None, help="truncation order override")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force enumeration cross-check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True, help="forbidden crossing number")
    p.add_argument("--min-arc", type=int, default=3)
    p.add_argument("--by-isolated", action="store_true")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET)
    p.add_argument("--shuffle-seed", type=int, default=None, help="shuffle branch order")
    _add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("roots", help="solve a quartic A x^4 + B x^3 + C x^2 + D x + E")
    p.add_argument("coeffs", type=float, nargs=5, metavar=("A", "B", "C", "D", "E"))
    _add_common(p)
    p.set_defaults(func=cmd_roots)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except oracle.BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
