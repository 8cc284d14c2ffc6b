"""Exact counts of irreducible polynomials over finite fields and certified
checks of their monotonicity and log-convexity."""
from .arith import divisors, factorize, least_prime_factor, mobius, prime_power_decompose
from .count import PrimePower, closed_form_count, count_table, irreducible_count
from .errors import CapacityError, DomainError, NotPrimePower
from .inequal import (
    DecisionConfig,
    Verdict,
    delta_bounds,
    ratio_increasing_at,
    root_increasing_at,
    root_ratio_decreasing_at,
)
from .thresholds import remark_table, scan_onset

__all__ = [
    "CapacityError", "DecisionConfig", "DomainError", "NotPrimePower", "PrimePower", "Verdict",
    "closed_form_count", "count_table", "delta_bounds", "divisors", "factorize",
    "irreducible_count", "least_prime_factor", "mobius", "prime_power_decompose",
    "ratio_increasing_at", "remark_table", "root_increasing_at", "root_ratio_decreasing_at",
    "scan_onset",
]
