#!/usr/bin/env python3
"""Richness comparison: Fibonacci vs Thue-Morse vs uniform random words.

For each word the script reports the average and minimum abelian-square
totals over distinct length-n factors, the implied quadratic constants,
and the growth exponent of the random baseline for contrast.

    python scripts/run_richness.py --lengths 8,16,32,64
"""

import argparse

from absquares.analysis import random_baseline, richness_report
from absquares.sturmian import fibonacci_word
from absquares.substitutions import thue_morse_prefix


def show(label, report):
    print(f"== {label}")
    print(f"{'n':>5} {'avg':>10} {'min':>6} {'avg/n^2':>9} {'min/n^2':>9} {'recur':>7}")
    for row in report.rows():
        print(
            f"{row['n']:>5} {float(row['avg']):>10.3f} {row['min']:>6}"
            f" {float(row['avg_over_n2']):>9.5f} {float(row['min_over_n2']):>9.5f}"
            f" {row['recurrence_index']:>7}"
        )
    print(
        f"   c_avg = {report.c_avg:.5f}  c_min = {report.c_min:.5f}"
        f"  recurrence/n ~ {report.recurrence_quotient_estimate:.2f}"
    )
    print()


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--lengths", default="8,16,32,64")
    ap.add_argument("--prefix-len", type=int, default=30_000)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    lengths = [int(x) for x in args.lengths.split(",")]

    show("Fibonacci word", richness_report(fibonacci_word(args.prefix_len), lengths))
    show("Thue-Morse word", richness_report(thue_morse_prefix(args.prefix_len), lengths))

    baseline = random_baseline(lengths, trials=args.trials, seed=args.seed)
    print("== uniform random binary words")
    for row in baseline.rows():
        print(f"{row['n']:>5} mean {row['mean']:>10.2f}  stddev {row['stddev']:>8.2f}")
    if baseline.exponent is not None:
        print(f"   growth exponent ~ n^{baseline.exponent:.3f} (rich words sit at n^2)")


if __name__ == "__main__":
    main()
