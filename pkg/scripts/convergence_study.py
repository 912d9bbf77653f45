#!/usr/bin/env python3
"""Track lambda(d) / normalization against its closed-form limit.

Degrees grow geometrically from --d-start by --factor until --d-stop.

Example:
    python scripts/convergence_study.py --family harmonic --n 3 --d-stop 1600
"""

import argparse

from projconst.asymptotics import LimitSpec, convergence_report
from projconst.geometry import Family


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--family", choices=["harmonic", "homogeneous", "polyleq"], default="harmonic"
    )
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument(
        "--normalization", choices=["dim_sqrt", "d_power", "log_d"], default=None
    )
    parser.add_argument("--d-start", type=int, default=25)
    parser.add_argument("--d-stop", type=int, default=800)
    parser.add_argument("--factor", type=int, default=2)
    parser.add_argument("--tol", type=float, default=1e-10)
    args = parser.parse_args()

    normalization = args.normalization
    if normalization is None:
        normalization = "log_d" if args.n == 2 else "d_power"
    spec = LimitSpec(Family(args.family), args.n, normalization)

    d_values = []
    d = args.d_start
    while d <= args.d_stop:
        d_values.append(d)
        d *= args.factor

    rows, non_monotone = convergence_report(spec, d_values, args.tol)
    print(f"{args.family} n={args.n} normalization={normalization}")
    print(f"{'d':>8} {'ratio':>16} {'limit':>16} {'deviation':>13}")
    for row in rows:
        print(
            f"{row.d:>8} {row.finite_ratio:>16.12f} {row.limit:>16.12f} "
            f"{row.deviation:>13.3e}"
        )
    if non_monotone:
        print("note: |deviation| is not monotonically decreasing over these degrees")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
