"""Number of monic irreducible degree-n polynomials over a field of order q.

Counts are plain Python ints.  Any integer base q >= 2 is accepted by the
formula routines; :class:`PrimePower` carries the validated field order when
the combinatorial meaning matters.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .arith import divisors, mobius, prime_power_decompose
from .errors import CapacityError, DomainError

DEFAULT_BIT_CAP = 2**26

BigCount = int


@dataclass(frozen=True)
class PrimePower:
    q: int
    p: int
    k: int
    validated: bool = True

    def __post_init__(self):
        if self.q < 2:
            raise DomainError(f"field order must be >= 2, got {self.q}")
        if self.validated and self.p**self.k != self.q:
            raise DomainError(f"{self.p}^{self.k} != {self.q}")

    @classmethod
    def of(cls, q: int, permissive: bool = False) -> "PrimePower":
        """Validate ``q`` as a prime power.

        With ``permissive=True`` a non-prime-power base is accepted and stored
        as ``p=q, k=1, validated=False``.
        """
        if permissive and q >= 2:
            try:
                p, k = prime_power_decompose(q)
            except DomainError:
                return cls(q, q, 1, validated=False)
            return cls(q, p, k)
        p, k = prime_power_decompose(q)
        return cls(q, p, k)

    def __int__(self) -> int:
        return self.q


def order_of(q: int | PrimePower) -> int:
    q = int(q)
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    return q


@lru_cache(maxsize=1 << 16)
def _count(n: int, q: int) -> int:
    total = 0
    for d in divisors(n):
        mu = mobius(d)
        if mu:
            total += mu * q ** (n // d)
    value, rem = divmod(total, n)
    if rem:
        raise AssertionError(f"Moebius sum for n={n}, q={q} not divisible by n")
    if value < 1:
        raise AssertionError(f"N_{n}({q}) = {value} < 1")
    return value


def irreducible_count(n: int, q: int | PrimePower) -> BigCount:
    """``(1/n) * sum_{d | n} mu(d) q^(n/d)``, computed exactly."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    return _count(n, order_of(q))


def closed_form_count(n: int, q: int | PrimePower) -> BigCount:
    """Explicit polynomial-in-q formulas for degrees 1 through 7."""
    q = order_of(q)
    if n == 1:
        num, den = q, 1
    elif n == 2:
        num, den = q * (q - 1), 2
    elif n == 3:
        num, den = q * (q * q - 1), 3
    elif n == 4:
        num, den = q * q * (q * q - 1), 4
    elif n == 5:
        num, den = q * (q**4 - 1), 5
    elif n == 6:
        num, den = q**6 - q**3 - q**2 + q, 6
    elif n == 7:
        num, den = q**7 - q, 7
    else:
        raise DomainError(f"closed forms cover degrees 1..7, got {n}")
    value, rem = divmod(num, den)
    assert rem == 0
    return value


@dataclass
class CountTable:
    q: PrimePower | int
    counts: list[BigCount] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.counts)

    def __getitem__(self, n: int) -> BigCount:
        if n < 1:
            raise IndexError(n)
        return self.counts[n - 1]

    def rows(self):
        return [(n, c) for n, c in enumerate(self.counts, start=1)]


def check_bit_cap(q: int, n: int, bit_cap: int) -> None:
    bits = n * (q.bit_length())
    if bits > bit_cap:
        raise CapacityError(f"q^{n} needs about {bits} bits, above the cap of {bit_cap}")


def count_table(q: int | PrimePower, n_max: int, bit_cap: int = DEFAULT_BIT_CAP) -> CountTable:
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    base = order_of(q)
    check_bit_cap(base, n_max, bit_cap)
    powers: dict[int, int] = {}

    def power(e: int) -> int:
        if e not in powers:
            powers[e] = base**e
        return powers[e]

    counts = []
    for n in range(1, n_max + 1):
        total = sum(mobius(d) * power(n // d) for d in divisors(n))
        value, rem = divmod(total, n)
        if rem:
            raise AssertionError(f"Moebius sum for n={n}, q={base} not divisible by n")
        counts.append(value)
    return CountTable(q, counts)
