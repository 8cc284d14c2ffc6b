"""Elementary integer arithmetic: factorization, Moebius function, divisors.

Inputs here are polynomial degrees and field orders, so everything fits in a
machine word.  Factorization goes through a smallest-prime-factor table for
small arguments and trial division plus Pollard-Brent beyond it.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import gmpy2
import numpy as np

from .errors import DomainError, NotPrimePower

SIEVE_LIMIT = 10**6

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        value = 1
        for p, e in self.factors:
            value *= p**e
        if value != self.n:
            raise AssertionError(f"factorization of {self.n} multiplies to {value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def num_divisors(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)


@lru_cache(maxsize=4)
def spf_table(limit: int = SIEVE_LIMIT) -> np.ndarray:
    """Smallest prime factor of every integer below ``limit + 1``.

    The returned array is read-only; it is built once per limit and shared.
    """
    spf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    unset = spf == 0
    spf[unset] = np.arange(limit + 1)[unset]
    spf.setflags(write=False)
    return spf


@lru_cache(maxsize=4)
def _small_primes(limit: int) -> tuple[int, ...]:
    spf = spf_table(limit)
    return tuple(int(p) for p in np.nonzero(spf[2:] == np.arange(2, limit + 1))[0] + 2)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Some nontrivial factor of the odd composite ``n``."""
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _large_prime_factors(n: int) -> list[int]:
    # n has no prime factor <= SIEVE_LIMIT here
    if n == 1:
        return []
    if is_prime(n):
        return [n]
    d = _pollard_brent(n, random.Random(n))
    return _large_prime_factors(d) + _large_prime_factors(n // d)


def factorize(n: int, limit: int = SIEVE_LIMIT) -> Factorization:
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    primes: list[int] = []
    m = n
    if m <= limit:
        spf = spf_table(limit)
        while m > 1:
            p = int(spf[m])
            primes.append(p)
            m //= p
    else:
        for p in _small_primes(limit):
            if p * p > m:
                break
            while m % p == 0:
                m //= p
                primes.append(p)
        if m > 1:
            if m < (limit + 1) ** 2:
                primes.append(m)
            else:
                primes.extend(_large_prime_factors(m))
    counts: dict[int, int] = {}
    for p in primes:
        counts[p] = counts.get(p, 0) + 1
    return Factorization(n, tuple(sorted(counts.items())))


def least_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError(f"least prime factor needs n >= 2, got {n}")
    return factorize(n).factors[0][0]


def mobius(d: int) -> int:
    if d < 1:
        raise DomainError(f"Moebius function needs d >= 1, got {d}")
    f = factorize(d)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def divisors(n: int) -> list[int]:
    if n < 1:
        raise DomainError(f"divisors needs n >= 1, got {n}")
    f = factorize(n)
    out = []
    for exps in product(*(range(e + 1) for _, e in f.factors)):
        out.append(math.prod(p**k for (p, _), k in zip(f.factors, exps)))
    return sorted(out)


def prime_power_decompose(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k`` and ``p`` prime."""
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    for k in range(q.bit_length(), 0, -1):
        root, exact = gmpy2.iroot(q, k)
        if exact and is_prime(int(root)):
            return int(root), k
    raise NotPrimePower(f"{q} is not a prime power")
