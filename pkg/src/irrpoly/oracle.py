"""Brute-force irreducible counts by sieving monic polynomials over GF(p^k).

Field elements are encoded as integers in ``[0, q)`` whose base-p digits are
the coefficient vector (constant term least significant).  A monic polynomial
of degree m is encoded by the base-q integer formed from its m lower
coefficients, so the monic polynomials of one degree are exactly
``range(q**m)`` and the sieve bitmap for that degree is a flat boolean array.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import is_prime
from .errors import CapacityError, DomainError

SIEVE_CAP = 2**22
FIELD_CAP = 2**10


@dataclass(frozen=True, eq=False)
class FieldRep:
    p: int
    k: int
    modulus: tuple[int, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(np.nonzero(self.add_table[a] == 0)[0][0])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        hits = np.nonzero(self.mul_table[a] == 1)[0]
        if len(hits) != 1:
            raise AssertionError(f"element {a} has {len(hits)} inverses")
        return int(hits[0])

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def digits(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.k))


@dataclass(frozen=True)
class MonicPoly:
    """Coefficients in ascending degree order; the last one is the field's 1."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1] != 1:
            raise DomainError("monic polynomial must end with leading coefficient 1")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_index(cls, index: int, degree: int, q: int) -> "MonicPoly":
        lower = tuple((index // q**i) % q for i in range(degree))
        return cls(lower + (1,))

    def index(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs[:-1]))


def _base_digits(values: np.ndarray, base: int, width: int) -> np.ndarray:
    out = np.empty((len(values), width), dtype=np.int64)
    for i in range(width):
        out[:, i] = (values // base**i) % base
    return out


def _prime_field(p: int) -> FieldRep:
    r = np.arange(p, dtype=np.int64)
    add = (r[:, None] + r[None, :]) % p
    mul = (r[:, None] * r[None, :]) % p
    return FieldRep(p, 1, (0, 1), add, mul)


def _extension_field(p: int, modulus: tuple[int, ...]) -> FieldRep:
    k = len(modulus) - 1
    q = p**k
    weights = p ** np.arange(k, dtype=np.int64)
    digits = _base_digits(np.arange(q, dtype=np.int64), p, k)

    add_digits = (digits[:, None, :] + digits[None, :, :]) % p
    add = add_digits @ weights

    # shifts[i][a] = digits of a * x^i reduced mod the modulus
    shifts = [digits]
    low = np.array(modulus[:k], dtype=np.int64)
    for _ in range(1, k):
        prev = shifts[-1]
        top = prev[:, k - 1]
        nxt = np.zeros_like(prev)
        nxt[:, 1:] = prev[:, :-1]
        # x^k == -(lower coefficients of the modulus)
        nxt = (nxt - top[:, None] * low[None, :]) % p
        shifts.append(nxt)
    prod = np.zeros((q, q, k), dtype=np.int64)
    for i in range(k):
        prod += shifts[i][:, None, :] * digits[None, :, i, None]
    mul = (prod % p) @ weights
    return FieldRep(p, k, tuple(modulus), add, mul)


@lru_cache(maxsize=32)
def build_field(p: int, k: int = 1) -> FieldRep:
    """GF(p^k), reduced modulo the smallest monic irreducible of degree k.

    "Smallest" is by the base-p index of the lower coefficients, so the
    choice is deterministic; the candidate list comes from sieving over GF(p).
    """
    if not is_prime(p):
        raise DomainError(f"characteristic must be prime, got {p}")
    if k < 1:
        raise DomainError(f"extension degree must be >= 1, got {k}")
    if p**k > FIELD_CAP:
        raise CapacityError(f"GF({p}^{k}) exceeds the table cap of {FIELD_CAP} elements")
    base = _prime_field(p)
    if k == 1:
        return base
    irreducible = _sieve(base, k)[k - 1]
    if len(irreducible) == 0:
        raise AssertionError(f"no irreducible of degree {k} over GF({p})")
    modulus = MonicPoly.from_index(int(irreducible[0]), k, p).coeffs
    return _extension_field(p, modulus)


def field_for_order(q: int) -> FieldRep:
    from .arith import prime_power_decompose

    p, k = prime_power_decompose(q)
    return build_field(p, k)


def _sieve(fld: FieldRep, n_max: int, cap: int = SIEVE_CAP) -> list[np.ndarray]:
    """Indices of monic irreducibles for each degree 1..n_max."""
    q = fld.q
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if q**n_max > cap:
        raise CapacityError(f"{q}^{n_max} monic polynomials exceed the sieve cap of {cap}")
    add, mul = fld.add_table, fld.mul_table
    # full coefficient arrays (leading 1 appended) of all monic polys per degree
    monic = [None] + [
        np.hstack([_base_digits(np.arange(q**e, dtype=np.int64), q, e),
                   np.ones((q**e, 1), dtype=np.int64)])
        for e in range(1, n_max + 1)
    ]
    irreducible: list[np.ndarray] = []
    for m in range(1, n_max + 1):
        composite = np.zeros(q**m, dtype=bool)
        # every reducible h of degree m has an irreducible factor f whose
        # degree d is minimal among its factors, so deg(h/f) >= d
        for d in range(1, m // 2 + 1):
            irr = irreducible[d - 1]
            if len(irr) == 0:
                continue
            f = monic[d][irr]
            g = monic[m - d]
            e = m - d
            index = np.zeros((len(f), len(g)), dtype=np.int64)
            for c in range(m):
                acc = np.zeros((len(f), len(g)), dtype=np.int64)
                for i in range(max(0, c - e), min(d, c) + 1):
                    acc = add[acc, mul[f[:, i, None], g[None, :, c - i]]]
                index += acc * q**c
            composite[index.ravel()] = True
        irreducible.append(np.nonzero(~composite)[0])
    return irreducible


def sieve_irreducible_counts(fld: FieldRep, n_max: int, cap: int = SIEVE_CAP) -> list[int]:
    """Count monic irreducibles of each degree 1..n_max by exhaustive sieving."""
    return [len(a) for a in _sieve(fld, n_max, cap)]


def irreducibles(fld: FieldRep, degree: int) -> list[MonicPoly]:
    idx = _sieve(fld, degree)[degree - 1]
    return [MonicPoly.from_index(int(i), degree, fld.q) for i in idx]


def check_field_axioms(fld: FieldRep, samples: int = 2000, seed: int = 0) -> bool:
    """Distributivity, commutativity, associativity, inverses and a^q = a.

    Exhaustive for q <= 9, otherwise checked on ``samples`` random triples.
    """
    q = fld.q
    add, mul = fld.add_table, fld.mul_table
    if q <= 9:
        grid = np.indices((q, q, q)).reshape(3, -1)
        a, b, c = grid
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, q, size=(3, samples))
    if not np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]]):
        return False
    if not np.array_equal(mul[a, b], mul[b, a]) or not np.array_equal(add[a, b], add[b, a]):
        return False
    if not np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]):
        return False
    elems = np.unique(a)
    for x in elems:
        x = int(x)
        if x and len(np.nonzero(mul[x] == 1)[0]) != 1:
            return False
        if fld.pow(x, q) != x:
            return False
    return True
