"""Exact checks of the error-term bounds on n*N_n(q) and log N_n(q).

Polynomial and rational bounds are compared after clearing denominators, so
the verdicts are exact.  The two checks that involve logarithms use the
interval engine in :mod:`irrpoly.certify`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import least_prime_factor
from .certify import log_fixed
from .count import PrimePower, irreducible_count, order_of
from .errors import DomainError


@dataclass(frozen=True)
class BoundCheck:
    holds: bool
    lhs: int | Fraction
    rhs: int | Fraction


@dataclass(frozen=True)
class ResidualBound:
    """``n N_n(q) = q^n (1 + r)`` with r stored in lowest terms."""

    n: int
    q: int
    residual_num: int
    residual_den: int
    L: int
    c_bound_ok: bool

    @property
    def residual(self) -> Fraction:
        return Fraction(self.residual_num, self.residual_den)


def _need(n: int, least: int, what: str) -> None:
    if n < least:
        raise DomainError(f"{what} needs n >= {least}, got {n}")


def L(n: int, q: int | PrimePower) -> int:
    """Error scale (q - 1) q^(n - n/p(n) - 1), p(n) the least prime factor."""
    _need(n, 2, "L_n(q)")
    q = order_of(q)
    return (q - 1) * q ** (n - n // least_prime_factor(n) - 1)


def check_eq21(n: int, q: int | PrimePower) -> BoundCheck:
    """(q - 1) |n N_n(q) - q^n| < q^(n/p(n) + 1)."""
    _need(n, 2, "the counting error bound")
    q = order_of(q)
    lhs = (q - 1) * abs(n * irreducible_count(n, q) - q**n)
    rhs = q ** (n // least_prime_factor(n) + 1)
    return BoundCheck(lhs < rhs, lhs, rhs)


def residual(n: int, q: int | PrimePower) -> ResidualBound:
    _need(n, 2, "the residual")
    q = order_of(q)
    qn = q**n
    num = n * irreducible_count(n, q) - qn
    g = gcd(num, qn)
    ln = L(n, q)
    return ResidualBound(n, q, num // g, qn // g, ln, ln * abs(num) < qn)


def check_eq22(n: int, q: int | PrimePower, precision: int = 128, max_bits: int = 1 << 16) -> bool:
    """Rigorously decide |log N_n(q) - log(q^n / n)| < 2 / L_n(q).

    The difference is evaluated directly as log(n N_n / q^n), a logarithm of
    a rational close to 1, so no cancellation between large logs occurs.
    The working precision starts past the size of 2/L_n and doubles on
    indecision.
    """
    _need(n, 2, "the log error bound")
    q = order_of(q)
    ratio = Fraction(n * irreducible_count(n, q), q**n)
    limit = Fraction(2, L(n, q))
    bits = precision + L(n, q).bit_length()
    while bits <= max_bits:
        lo, hi = log_fixed(ratio, bits)
        worst = Fraction(max(abs(lo), abs(hi)), 1 << bits)
        if worst < limit:
            return True
        best = Fraction(0 if lo <= 0 <= hi else min(abs(lo), abs(hi)), 1 << bits)
        if best >= limit:
            return False
        bits *= 2
    return False


def check_eq23(n: int, q: int | PrimePower) -> tuple[bool, bool]:
    """Cubic lower bound on L_n(q) and its comparison with (n - 1)^2 / 8.

    With t = q - 1 and everything scaled by 8:
    8 L >= 8t + 4(n-2) t^2 + (n-2)(n-4) t^3  and that middle value > (n-1)^2.
    """
    _need(n, 5, "the cubic L bound")
    q = order_of(q)
    t = q - 1
    middle8 = 8 * t + 4 * (n - 2) * t**2 + (n - 2) * (n - 4) * t**3
    return 8 * L(n, q) >= middle8, middle8 > (n - 1) ** 2


def quartic_lower48(n: int, t: int) -> int:
    """48 times the quartic lower bound on L_n(q), t = q - 1."""
    return (48 * t + 24 * (n - 2) * t**2 + 6 * (n * n - 6 * n + 8) * t**3
            + (n**3 - 12 * n * n + 44 * n - 48) * t**4)


def check_eq24(n: int, q: int | PrimePower) -> bool:
    _need(n, 6, "the quartic L bound")
    q = order_of(q)
    return 48 * L(n, q) >= quartic_lower48(n, q - 1)


def eq25_lower_bound(n: int, q: int | PrimePower, precision: int = 128) -> tuple[Fraction, Fraction]:
    """Enclosure of the explicit lower bound for half the log-root gap.

    (log n - 1)/(n(n+1)(n+2)) - 1/(n^2(n+2)) - 2/((n+1)L_{n+1})
    - 1/(n L_n) - 1/((n+2) L_{n+2}).  Only the log n term is inexact.
    """
    _need(n, 2, "the gap lower bound")
    q = order_of(q)
    if precision < 32:
        raise DomainError(f"precision must be >= 32 bits, got {precision}")
    lo, hi = log_fixed(n, precision)
    scale = 1 << precision
    cube = n * (n + 1) * (n + 2)
    rest = (Fraction(1, n * n * (n + 2)) + Fraction(2, (n + 1) * L(n + 1, q))
            + Fraction(1, n * L(n, q)) + Fraction(1, (n + 2) * L(n + 2, q)))
    return (Fraction(lo - scale, scale * cube) - rest,
            Fraction(hi - scale, scale * cube) - rest)


def P(n: int) -> int:
    return 32 * n**3 - 360 * n**2 + 1276 * n - 1365


def check_pn_chain(n: int, q: int | PrimePower) -> tuple[bool, bool]:
    """For q >= 9: L_n(q) >= (8/3) P(n), and the final log-convexity margin
    -1/(n+1)^2 + 12/(8P(n+1)) + 6/(8P(n)) + 6/(8P(n+2)) is negative."""
    _need(n, 6, "the q >= 9 chain")
    q = order_of(q)
    if q < 9:
        raise DomainError(f"the q >= 9 chain needs q >= 9, got {q}")
    a = 3 * L(n, q) >= 8 * P(n)
    margin = (-Fraction(1, (n + 1) ** 2) + Fraction(12, 8 * P(n + 1))
              + Fraction(6, 8 * P(n)) + Fraction(6, 8 * P(n + 2)))
    return a, margin < 0


def cubic_lower48(n: int) -> int:
    """48 times the q <= 8 lower bound (n/48)(n^2 - 6n + 32) on L_n(q)."""
    return n * (n * n - 6 * n + 32)


def smallq_margin(n: int) -> Fraction:
    return (-Fraction(1, (n + 1) ** 2) + Fraction(4 * 48, (n + 1) * (n * n - 4 * n + 27))
            + Fraction(2 * 48, n * (n * n - 6 * n + 32))
            + Fraction(2 * 48, (n + 2) * (n * n - 2 * n + 24)))


def check_smallq_chain(n: int, q: int | PrimePower) -> tuple[bool, bool]:
    """For q <= 8: the cubic lower bounds on L_n, L_{n+1}, L_{n+2}, and
    whether the resulting log-convexity margin is negative.

    The margin is only claimed negative from n = 389 on; below that the
    second flag is informative, not a failure of the bound.
    """
    _need(n, 6, "the q <= 8 chain")
    q = order_of(q)
    if q > 8:
        raise DomainError(f"the q <= 8 chain needs q <= 8, got {q}")
    a = all(48 * L(m, q) >= cubic_lower48(m) for m in (n, n + 1, n + 2))
    return a, smallq_margin(n) < 0
