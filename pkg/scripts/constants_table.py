#!/usr/bin/env python3
"""Tabulate projection constants for one sphere across the three families.

Example:
    python scripts/constants_table.py --n 3 --d-max 10
"""

import argparse
import math

from projconst.constants import lambda_harmonic, lambda_homogeneous, lambda_poly_leq
from projconst.geometry import Family, SpaceId, dim_space


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--d-max", type=int, default=10)
    parser.add_argument("--tol", type=float, default=1e-10)
    args = parser.parse_args()

    print(f"projection constants on S^{args.n - 1}")
    header = f"{'d':>4} {'dim H_d':>8} {'harmonic':>14} {'homogeneous':>14} {'poly<=d':>14}"
    print(header)
    print("-" * len(header))
    for d in range(0, args.d_max + 1):
        harm = lambda_harmonic(args.n, d, args.tol).value
        homo = (
            lambda_homogeneous(args.n, d, args.tol).value if d >= 1 else math.nan
        )
        full = lambda_poly_leq(args.n, d, args.tol).value
        dim = dim_space(SpaceId(Family.HARMONIC, args.n, d))
        print(f"{d:>4} {dim:>8} {harm:>14.10f} {homo:>14.10f} {full:>14.10f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
