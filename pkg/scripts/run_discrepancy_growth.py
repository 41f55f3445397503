#!/usr/bin/env python3
"""Growth of N * D_N along rotation orbits against the logarithmic bound.

    python scripts/run_discrepancy_growth.py --angle 'cf:[0;|2]' --max-exp 14
"""

import argparse

from absquares.discrepancy import rotation_discrepancy
from absquares.quadratic import parse_angle


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--angle", default="cf:[0;|1]")
    ap.add_argument("--max-exp", type=int, default=13, help="largest N is 2**max-exp")
    args = ap.parse_args()
    angle = parse_angle(args.angle)

    print(f"angle = {angle!r} ~ {float(angle):.6f}")
    print(f"{'N':>8} {'D_N':>12} {'N*D_N':>10} {'bound':>10} {'slack':>10}")
    for e in range(1, args.max_exp + 1):
        n = 2**e
        rep = rotation_discrepancy(angle, n, witness_limit=0)
        scaled = float(rep.scaled())
        print(
            f"{n:>8} {float(rep.value):>12.8f} {scaled:>10.4f}"
            f" {rep.bound:>10.4f} {rep.bound - scaled:>10.4f}"
        )


if __name__ == "__main__":
    main()
