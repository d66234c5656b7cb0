#!/usr/bin/env python3
"""Sweep the grading bound and watch the universal grading group stabilize.

For each type, prints the invariant factors of the grading group computed
from tensor relations among generators of coordinate sum <= B, for each B
up to --max-bound, marking where it differs from the fundamental group.
"""

import argparse
import time

from rootatlas.grading import grading_presentation, matches_fundamental_group
from rootatlas.lattice import fundamental_group
from rootatlas.rootsys import build_root_system, parse_cartan_type


def _factors(group) -> str:
    return ",".join(map(str, group.invariant_factors)) or "trivial"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "types",
        nargs="*",
        default=["A1", "A2", "B2", "C2", "G2", "A3"],
        help="Cartan types to sweep (default: %(default)s)",
    )
    ap.add_argument("--max-bound", type=int, default=3)
    args = ap.parse_args()

    for name in args.types:
        rs = build_root_system(parse_cartan_type(name))
        target = fundamental_group(rs.cartan_type)
        print(f"{name} (fundamental group {_factors(target)})")
        for bound in range(args.max_bound + 1):
            t0 = time.monotonic()
            pres = grading_presentation(rs, bound)
            match = matches_fundamental_group(pres, rs)
            dt = time.monotonic() - t0
            shape = _factors(pres.quotient)
            if pres.free_rank:
                shape += f" + Z^{pres.free_rank}"
            marker = "" if match else "   <- differs"
            print(f"  B={bound}: {shape}  [{dt:.2f}s]{marker}")


if __name__ == "__main__":
    main()
