#!/usr/bin/env python3
"""Onset of strictly decreasing root ratios per q, against the expected table."""
import argparse
import time

from irrpoly.inequal import DecisionConfig
from irrpoly.thresholds import format_remark_table, remark_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-set", default="2,3,4,5,7,8,9,11,13,16,25,27")
    ap.add_argument("--n-max", type=int, default=500)
    ap.add_argument("--exact-only", action="store_true")
    ap.add_argument("--bit-cap", type=int, default=2**31)
    args = ap.parse_args()
    qs = [int(x) for x in args.q_set.split(",")]
    config = DecisionConfig(exact_only=args.exact_only, bit_cap=args.bit_cap)
    start = time.time()
    rows = remark_table(qs, args.n_max, config)
    print(format_remark_table(rows))
    print(f"horizon {args.n_max}, {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
