#!/usr/bin/env python3
"""Sweep the exhaustive search over word lengths and alphabet sizes.

Emits one line per (objective, sigma, length) with the maximum and a few
witnesses.  Lengths beyond the per-alphabet budgets are skipped rather
than attempted.  Useful for regenerating the small-word tables after any
change to the counting engine.

    python scripts/run_search_sweep.py --max-len 14 --workers 4
"""

import argparse
import time

from absquares.search import (
    DEFAULT_BUDGETS,
    BudgetExceededError,
    max_asf,
    max_inequivalent,
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=14)
    ap.add_argument("--sigmas", default="2,3")
    ap.add_argument("--workers", type=int, default=0)
    ap.add_argument("--witness-cap", type=int, default=4)
    args = ap.parse_args()

    runners = [("distinct", max_asf), ("inequivalent", max_inequivalent)]
    for sigma in [int(s) for s in args.sigmas.split(",")]:
        budget = DEFAULT_BUDGETS.get(sigma, 0)
        print(f"== sigma = {sigma} (budget: length <= {budget})")
        for label, runner in runners:
            for length in range(2, args.max_len + 1):
                t0 = time.monotonic()
                try:
                    result = runner(
                        sigma,
                        length,
                        workers=args.workers,
                        witness_cap=args.witness_cap,
                    )
                except BudgetExceededError:
                    print(f"  {label:>12} L={length:<3} skipped (over budget)")
                    continue
                witnesses = " ".join(result.witnesses)
                more = "+" if result.witnesses_truncated else ""
                print(
                    f"  {label:>12} L={length:<3} max={result.maximum:<4}"
                    f" [{time.monotonic() - t0:5.2f}s] {witnesses}{more}"
                )


if __name__ == "__main__":
    main()
