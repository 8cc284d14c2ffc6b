"""Rigorous enclosures of natural logarithms of exact positive rationals.

Everything is done in fixed point: a value v is carried as a pair of integers
``(lo, hi)`` with ``lo / 2**W <= v <= hi / 2**W``.  Every operation rounds
``lo`` toward minus infinity and ``hi`` toward plus infinity, so the pair stays
a valid enclosure no matter how many operations are chained.  Series tails are
bounded explicitly rather than estimated.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

# leading bits kept when truncating a huge integer before taking its log
_TRUNC_GUARD = 64


class Comparison(Enum):
    LHS_GREATER = "lhs_greater"
    RHS_GREATER = "rhs_greater"
    INDETERMINATE = "indeterminate"


def _cdiv(a: int, b: int) -> int:
    return -((-a) // b)


def _atanh_fixed(u: int, v: int, w: int) -> tuple[int, int]:
    """Enclosure of atanh(u/v) at scale 2**w, requiring |u/v| <= 1/3."""
    if u < 0:
        lo, hi = _atanh_fixed(-u, v, w)
        return -hi, -lo
    if u == 0:
        return 0, 0
    if 3 * u > v:
        raise ValueError("atanh argument outside [-1/3, 1/3]")
    one = 1 << w
    p_lo = (u << w) // v
    p_hi = _cdiv(u << w, v)
    z2_lo = (p_lo * p_lo) >> w
    z2_hi = _cdiv(p_hi * p_hi, one)
    s_lo = s_hi = 0
    k = 1
    while True:
        s_lo += p_lo // k
        s_hi += _cdiv(p_hi, k)
        k += 2
        p_lo = (p_lo * z2_lo) >> w
        p_hi = _cdiv(p_hi * z2_hi, one)
        if p_hi <= 1:
            break
    # remaining terms sum to at most z^k / (k (1 - z^2)) and z^2 <= 1/9 + ulp
    s_hi += _cdiv(5 * p_hi, 4 * k)
    return s_lo, s_hi


@lru_cache(maxsize=64)
def ln2_fixed(w: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, w)
    return 2 * lo, 2 * hi


def _log_reduced(a: int, b: int, w: int) -> tuple[int, int]:
    """ln(a/b) for positive a, b of moderate size."""
    if a == b:
        return 0, 0
    e = a.bit_length() - b.bit_length()
    num, den = (a, b << e) if e >= 0 else (a << -e, b)
    # num/den lies in (1/2, 2), so the atanh argument lies in (-1/3, 1/3)
    t_lo, t_hi = _atanh_fixed(num - den, num + den, w)
    l2_lo, l2_hi = ln2_fixed(w)
    if e >= 0:
        return 2 * t_lo + e * l2_lo, 2 * t_hi + e * l2_hi
    return 2 * t_lo + e * l2_hi, 2 * t_hi + e * l2_lo


def _truncate(x: int, keep: int) -> tuple[int, int, int]:
    """``x`` lies in ``[m << s, (m + 1) << s]``; returns (m, exact?, s)."""
    s = max(0, x.bit_length() - keep)
    m = x >> s
    return m, int((m << s) != x), s


def log_fixed(x: int | Fraction, w: int) -> tuple[int, int]:
    """Enclosure ``(lo, hi)`` of ln(x) at scale 2**w for rational x > 0."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"log of non-positive value {x}")
    a, b = x.numerator, x.denominator
    # rounding errors grow with the series length and the ln 2 multiple
    guard = 8 + w.bit_length() + max(a.bit_length(), b.bit_length()).bit_length()
    wi = w + guard
    keep = wi + _TRUNC_GUARD
    if a.bit_length() <= keep and b.bit_length() <= keep:
        lo, hi = _log_reduced(a, b, wi)
    else:
        am, a_inexact, sa = _truncate(a, keep)
        bm, b_inexact, sb = _truncate(b, keep)
        # x in [am / (bm + 1), (am + 1) / bm] * 2^(sa - sb)
        lo, _ = _log_reduced(am, bm + b_inexact, wi)
        _, hi = _log_reduced(am + a_inexact, bm, wi)
        shift = sa - sb
        l2_lo, l2_hi = ln2_fixed(wi)
        if shift >= 0:
            lo, hi = lo + shift * l2_lo, hi + shift * l2_hi
        else:
            lo, hi = lo + shift * l2_hi, hi + shift * l2_lo
    return lo >> guard, _cdiv(hi, 1 << guard)


def log_bounds(x: int | Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational lower and upper bounds on ln(x), about 2**-bits apart."""
    lo, hi = log_fixed(x, bits)
    scale = 1 << bits
    return Fraction(lo, scale), Fraction(hi, scale)


def weighted_log_sum(terms, w: int) -> tuple[int, int]:
    """Enclosure of sum(e * ln(b)) over ``(b, e)`` pairs with e >= 0."""
    lo = hi = 0
    for base, exp in terms:
        if exp < 0 or base < 1:
            raise ValueError(f"need base >= 1 and exponent >= 0, got ({base}, {exp})")
        if base == 1 or exp == 0:
            continue
        l, h = log_fixed(base, w)
        lo += exp * l
        hi += exp * h
    return lo, hi


def certified_power_compare(lhs, rhs, precision: int = 128) -> tuple[Comparison, dict]:
    """Compare prod(b**e) on both sides using interval logarithms.

    ``precision`` is the number of fractional bits resolved in the weighted
    log sums; the per-log working precision is raised by the bit length of
    the largest exponent so that precision is not eaten by the weights.
    Overlapping enclosures give INDETERMINATE, never a guess.
    """
    lhs, rhs = list(lhs), list(rhs)
    max_exp = max((e for _, e in lhs + rhs), default=1)
    w = precision + max(1, max_exp).bit_length() + 4
    l_lo, l_hi = weighted_log_sum(lhs, w)
    r_lo, r_hi = weighted_log_sum(rhs, w)
    if l_lo > r_hi:
        result = Comparison.LHS_GREATER
    elif r_lo > l_hi:
        result = Comparison.RHS_GREATER
    else:
        result = Comparison.INDETERMINATE
    scale = 1 << w
    witness = {
        "precision": precision,
        "lhs": (Fraction(l_lo, scale), Fraction(l_hi, scale)),
        "rhs": (Fraction(r_lo, scale), Fraction(r_hi, scale)),
    }
    return result, witness
