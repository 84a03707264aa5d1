#!/usr/bin/env python3
"""Emit plot-ready CSV of the six starlike threshold equations' left-hand
sides over a nu grid (alpha = 0 by default).

Each row holds nu followed by the values of the defining functions whose
unique roots are the critical orders; pipe into any plotting tool.

Usage: threshold_curves.py [--alpha A] [--lo NU] [--hi NU] [--step S]
"""
import argparse
import sys

sys.path.insert(0, __file__.rsplit("/", 2)[0] + "/src")

from besselprod.radii import Kind
from besselprod.thresholds import _starlike_lhs, special_roots


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", type=float, default=0.0)
    parser.add_argument("--lo", type=float, default=None)
    parser.add_argument("--hi", type=float, default=1.0)
    parser.add_argument("--step", type=float, default=0.01)
    args = parser.parse_args()

    lo = args.lo
    if lo is None:
        lo = special_roots().nu_star + 1e-3
    kinds = list(Kind)
    fns = [_starlike_lhs(kind, args.alpha) for kind in kinds]

    print("nu," + ",".join(f"lhs_{k.value}" for k in kinds))
    nu = lo
    while nu <= args.hi + 1e-12:
        row = [f"{nu:.6f}"] + ["%.17g" % fn(nu) for fn in fns]
        print(",".join(row))
        nu += args.step
    return 0


if __name__ == "__main__":
    sys.exit(main())
