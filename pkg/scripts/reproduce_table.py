#!/usr/bin/env python3
"""Reproduce the subexponential-factor table for k = 3.

Prints n, the exact factor S_{3,3}(n)/base^n, the asymptotic factor
K' 4!/(n(n-1)...(n-4)), and their ratio.  The ratio column makes the
slow 1/n convergence of the prefactor visible.
"""

import argparse

from crossing_count import asymptotics


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=100)
    parser.add_argument("--step", type=int, default=10)
    parser.add_argument("--base", type=float, default=asymptotics.GROWTH_RATE_K3)
    parser.add_argument(
        "--computed-base", action="store_true", help="use the computed 1/rho_3"
    )
    args = parser.parse_args()

    base = args.base
    if args.computed_base:
        from fractions import Fraction

        base = asymptotics.compute_rho(3, Fraction(1, 4)).growth_rate
    print(f"base = {base:.10g}")
    print(f"{'n':>6}  {'exact':>12}  {'asymptotic':>12}  {'ratio':>8}")
    for n in range(args.step, args.n_max + 1, args.step):
        exact = asymptotics.exact_subexp_factor(n, base) if base > 1 else None
        asym = asymptotics.subexp_factor(n) if n >= 5 else None
        exact_s = "-" if exact is None else f"{exact:.4e}"
        asym_s = "-" if asym is None else f"{asym:.4e}"
        ratio_s = "-" if not (exact and asym) else f"{exact / asym:.4f}"
        print(f"{n:>6}  {exact_s:>12}  {asym_s:>12}  {ratio_s:>8}")


if __name__ == "__main__":
    main()
