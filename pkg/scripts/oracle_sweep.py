#!/usr/bin/env python3
"""Sieve-versus-formula comparison for every n with q^n under a cap."""
import argparse
import time

from irrpoly.count import irreducible_count
from irrpoly.oracle import field_for_order, sieve_irreducible_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-set", default="2,3,4,5,7,8,9")
    ap.add_argument("--log2-cap", type=int, default=20)
    args = ap.parse_args()
    ok = True
    for q in (int(x) for x in args.q_set.split(",")):
        n_max = 1
        while q ** (n_max + 1) <= 2**args.log2_cap:
            n_max += 1
        start = time.time()
        sieve = sieve_irreducible_counts(field_for_order(q), n_max, cap=2**args.log2_cap)
        formula = [irreducible_count(n, q) for n in range(1, n_max + 1)]
        agree = sieve == formula
        ok &= agree
        print(f"q={q:>2} n<={n_max:>2} agree={agree} {time.time() - start:6.2f}s  last={sieve[-1]}")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
