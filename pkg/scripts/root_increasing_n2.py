#!/usr/bin/env python3
"""Field orders q for which N_3(q)^2 <= N_2(q)^3, i.e. the cube root of N_3
does not exceed the square root of N_2.

For large q the comparison tends to q/3^(1/3) versus q/sqrt(2), so it fails
for every q past a small threshold.
"""
import argparse

from irrpoly.arith import prime_power_decompose
from irrpoly.count import irreducible_count
from irrpoly.errors import NotPrimePower


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q-max", type=int, default=200)
    args = ap.parse_args()
    for q in range(2, args.q_max + 1):
        try:
            prime_power_decompose(q)
        except NotPrimePower:
            continue
        a, b = irreducible_count(2, q), irreducible_count(3, q)
        if b * b <= a**3:
            print(f"q={q}: N_2={a} N_3={b}  N_3^2={b * b} <= N_2^3={a**3}")


if __name__ == "__main__":
    main()
