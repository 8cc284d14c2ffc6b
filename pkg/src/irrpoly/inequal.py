"""Deciders for the three monotonicity properties of N_n(q).

Each property at index n is a strict inequality between products of integer
powers of counts.  Deciding it goes through interval logarithms first
(doubling the precision up to a cap) and falls back to exact big-integer
powering only if the enclosures never separate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from .certify import Comparison, certified_power_compare, log_fixed
from .count import DEFAULT_BIT_CAP, PrimePower, irreducible_count, order_of
from .errors import CapacityError, DomainError

EXACT = "exact"
CERTIFIED = "certified"


@dataclass(frozen=True)
class DecisionConfig:
    start_bits: int = 128
    max_bits: int = 8192
    exact_only: bool = False
    bit_cap: int = DEFAULT_BIT_CAP

    def __post_init__(self):
        if self.start_bits < 32:
            raise DomainError(f"precision must be >= 32 bits, got {self.start_bits}")


DEFAULT_CONFIG = DecisionConfig()


@dataclass(frozen=True)
class Verdict:
    holds: bool
    method: str
    witness: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class DeltaValue:
    n: int
    q: int
    lower: Fraction
    upper: Fraction


def exact_power_compare(lhs, rhs, bit_cap: int = DEFAULT_BIT_CAP) -> int:
    """``(sign, lhs_bits, rhs_bits)`` for prod(lhs) - prod(rhs), formed exactly."""
    for side in (lhs, rhs):
        bits = sum(e * int(b).bit_length() for b, e in side)
        if bits > bit_cap:
            raise CapacityError(f"exact comparison needs ~{bits} bits, cap is {bit_cap}")

    def product(side):
        out = gmpy2.mpz(1)
        for b, e in side:
            out *= gmpy2.mpz(b) ** e
        return out

    a, b = product(lhs), product(rhs)
    return (a > b) - (a < b), a.bit_length(), b.bit_length()


def decide_greater(lhs, rhs, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Decide ``prod(lhs) > prod(rhs)`` strictly; ties count as failure."""
    lhs, rhs = list(lhs), list(rhs)
    if not config.exact_only:
        bits = config.start_bits
        while bits <= config.max_bits:
            result, witness = certified_power_compare(lhs, rhs, bits)
            if result is not Comparison.INDETERMINATE:
                return Verdict(result is Comparison.LHS_GREATER, CERTIFIED, witness)
            bits *= 2
    sign, lbits, rbits = exact_power_compare(lhs, rhs, config.bit_cap)
    return Verdict(sign > 0, EXACT, {"lhs_bits": lbits, "rhs_bits": rbits, "cmp": sign})


def _check_index(n: int) -> None:
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")


def root_increasing_at(n: int, q: int | PrimePower, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Whether N_{n+1}^(1/(n+1)) > N_n^(1/n), i.e. N_{n+1}^n > N_n^(n+1)."""
    _check_index(n)
    q = order_of(q)
    a, b = irreducible_count(n, q), irreducible_count(n + 1, q)
    return decide_greater([(b, n)], [(a, n + 1)], config)


def root_ratio_exponents(n: int) -> tuple[int, int, int]:
    mid, low, high = 2 * n * (n + 2), (n + 1) * (n + 2), n * (n + 1)
    if low + high - mid != 2:
        raise AssertionError(f"exponent identity broken at n={n}")
    return mid, low, high


def root_ratio_decreasing_at(n: int, q: int | PrimePower, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Whether consecutive root ratios strictly decrease at index n.

    Equivalent to N_{n+1}^(2n(n+2)) > N_n^((n+1)(n+2)) * N_{n+2}^(n(n+1)).
    """
    _check_index(n)
    q = order_of(q)
    mid, low, high = root_ratio_exponents(n)
    a, b, c = (irreducible_count(m, q) for m in (n, n + 1, n + 2))
    return decide_greater([(b, mid)], [(a, low), (c, high)], config)


def ratio_increasing_at(n: int, q: int | PrimePower, config: DecisionConfig = DEFAULT_CONFIG) -> Verdict:
    """Whether N_{n+1}^2 < N_n * N_{n+2}; always decided exactly."""
    _check_index(n)
    q = order_of(q)
    a, b, c = (irreducible_count(m, q) for m in (n, n + 1, n + 2))
    lhs, rhs = a * c, b * b
    sign = (lhs > rhs) - (lhs < rhs)
    return Verdict(sign > 0, EXACT, {"lhs_bits": lhs.bit_length(), "rhs_bits": rhs.bit_length(), "cmp": sign})


def delta_bounds(n: int, q: int | PrimePower, precision: int = 128) -> DeltaValue:
    """Enclosure of 2 log N_{n+1}/(n+1) - log N_n/n - log N_{n+2}/(n+2)."""
    _check_index(n)
    if precision < 32:
        raise DomainError(f"precision must be >= 32 bits, got {precision}")
    q = order_of(q)
    w = precision + 4
    a = log_fixed(irreducible_count(n, q), w)
    b = log_fixed(irreducible_count(n + 1, q), w)
    c = log_fixed(irreducible_count(n + 2, q), w)
    scale = 1 << w
    lower = Fraction(2 * b[0], (n + 1) * scale) - Fraction(a[1], n * scale) - Fraction(c[1], (n + 2) * scale)
    upper = Fraction(2 * b[1], (n + 1) * scale) - Fraction(a[0], n * scale) - Fraction(c[0], (n + 2) * scale)
    return DeltaValue(n, q, lower, upper)


PROPERTIES = {
    "root_increasing": root_increasing_at,
    "root_ratio_decreasing": root_ratio_decreasing_at,
    "ratio_increasing": ratio_increasing_at,
}
