#!/usr/bin/env python3
"""Count how many distance steps the prime-field planner needs.

For each rate and starting distance the planner walks d upward until the
length is integral and n + 1 is prime.  The step counts are printed as CSV;
nothing is asserted about them.

    python3 scripts/prime_search_steps.py --rates 3/4 2/5 4/7 --d-max 60
"""

from __future__ import annotations

import argparse
import csv
import sys
from statistics import mean

from qmds.errors import SearchExhausted
from qmds.planner import PlanRequest, plan


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="distance steps until n+1 is prime")
    ap.add_argument("--rates", nargs="+", default=["1/2", "2/3", "3/4", "2/5", "3/5", "4/7", "7/8", "15/16"])
    ap.add_argument("--d-min", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=40)
    ap.add_argument("--max-steps", type=int, default=512)
    args = ap.parse_args(argv)

    w = csv.writer(sys.stdout)
    w.writerow(["rate", "d_min", "d", "n", "field", "steps"])
    summary = {}
    for rate in args.rates:
        steps = []
        for d0 in range(args.d_min, args.d_max + 1):
            try:
                res = plan(PlanRequest(rate, d0, max_d_steps=args.max_steps))
            except SearchExhausted as exc:
                w.writerow([rate, d0, "", "", "", f">{args.max_steps} (last d {exc.last_d})"])
                continue
            steps.append(res.d_steps)
            w.writerow([rate, d0, res.d, res.n, str(res.field), res.d_steps])
        summary[rate] = steps
    for rate, steps in summary.items():
        if steps:
            print(f"# {rate}: mean {mean(steps):.2f} steps, max {max(steps)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
