"""Exact arithmetic for Bernoulli-derived sequences over arbitrary-precision rationals.

Indexing convention: every public operation takes the actual subscript of the
sequence value (so `h_value(ell, n, ...)` returns the value whose Bernoulli
factor is B_n, with n even). No half-index arguments are used here.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .modarith import divisors, is_prime

__all__ = [
    "BernoulliCache",
    "bernoulli",
    "genocchi_number",
    "h_value",
    "tangent_number",
    "von_staudt_clausen_check",
    "class_number_neg_p",
    "valuation",
]

H_VARIANTS = ("full", "minus", "plus")


class ConsistencyError(RuntimeError):
    """An exact-arithmetic invariant failed; signals a bug, not bad input."""


class BernoulliCache:
    """Grow-only cache of exact B_0..B_N (convention B_1 = -1/2).

    Values come from the binomial recurrence

        B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j,   B_0 = 1,

    with odd indices >= 3 skipped (they are zero). Fills are serialized
    behind a lock; reads of already-filled entries are lock-free. Growth is
    amortized doubling so interleaved callers do not trigger quadratic refills.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    def fill_to(self, n: int) -> None:
        if n <= self.max_index:
            return
        with self._lock:
            target = max(n, 2 * self.max_index)
            values = self._values
            for m in range(len(values), target + 1):
                if m % 2 == 1:
                    values.append(Fraction(0))
                    continue
                # C(m+1, j) over even j, updated incrementally
                c = 1
                s = Fraction(0)
                for j in range(0, m, 2):
                    if j:
                        c = c * (m + 2 - j) * (m + 3 - j) // (j * (j - 1))
                    s += c * values[j]
                s += Fraction(-(m + 1), 2)  # j = 1 term with B_1 = -1/2
                values.append(-s / (m + 1))

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n > self.max_index:
            self.fill_to(n)
        return self._values[n]


_CACHE = BernoulliCache()


def bernoulli(n: int, cache: BernoulliCache | None = None) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2)."""
    return (cache or _CACHE).get(n)


def genocchi_number(ell: int, n: int) -> int:
    """The integer ell * (1 - ell**n) * B_n.

    Raises ConsistencyError if the exact rational is not integral, which
    would indicate a Bernoulli bug rather than bad input.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    value = ell * (1 - Fraction(ell) ** n) * bernoulli(n)
    if value.denominator != 1:
        raise ConsistencyError(f"G_{n} for ell={ell} is not integral: {value}")
    return int(value)


def h_value(ell: int, n: int, variant: str = "full") -> Fraction:
    """Exact H-value at even subscript n.

    full:  (1 - ell**n)     * B_n / n
    minus: (1 - ell**(n/2)) * B_n / n
    plus:  (1 + ell**(n/2)) * B_n / n
    """
    if n < 2 or n % 2:
        raise ValueError(f"subscript must be even and >= 2, got {n}")
    if variant == "full":
        factor = 1 - Fraction(ell) ** n
    elif variant == "minus":
        factor = 1 - Fraction(ell) ** (n // 2)
    elif variant == "plus":
        factor = 1 + Fraction(ell) ** (n // 2)
    else:
        raise ValueError(f"unknown variant {variant!r}; expected one of {H_VARIANTS}")
    return factor * bernoulli(n) / n


def tangent_number(n: int) -> int:
    """n-th tangent number: the coefficient T_n in tan t = sum T_n t^(2n-1)/(2n-1)!.

    Evaluated as (-4)**n times the full H-value at subscript 2n for ell = 2;
    must come out a positive integer.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    value = Fraction(-4) ** n * h_value(2, 2 * n, "full")
    if value.denominator != 1 or value <= 0:
        raise ConsistencyError(f"tangent number T_{n} came out as {value}")
    return int(value)


def von_staudt_clausen_check(n: int) -> bool:
    """True iff B_n + sum of 1/p over primes p with (p-1) | n is an integer."""
    if n < 2 or n % 2:
        raise ValueError(f"subscript must be even and >= 2, got {n}")
    s = bernoulli(n)
    for d in divisors(n):
        if is_prime(d + 1):
            s += Fraction(1, d + 1)
    return s.denominator == 1


def class_number_neg_p(p: int) -> int:
    """Class number h(-p) of Q(sqrt(-p)) for a prime p = 3 mod 4, p > 3.

    Counts reduced primitive binary quadratic forms (a, b, c) of discriminant
    -p in the standard window |b| <= a <= c; a prime discriminant makes every
    form primitive.
    """
    if p <= 3 or p % 4 != 3 or not is_prime(p):
        raise ValueError(f"p must be a prime = 3 mod 4 greater than 3, got {p}")
    h = 0
    for b in range(1, math.isqrt(p // 3) + 1, 2):
        m = (b * b + p) // 4
        for a in range(b, math.isqrt(m) + 1):
            if m % a == 0:
                # forms (a, +-b, c); the sign collapses when |b| = a or a = c
                h += 1 if (a == b or a * a == m) else 2
    return h


def valuation(q: Fraction, p: int) -> int:
    """Exponent of the prime p in the nonzero rational q."""
    if q == 0:
        raise ValueError("valuation of 0 is undefined")
    v = 0
    num = abs(q.numerator)
    while num % p == 0:
        num //= p
        v += 1
    if v:
        return v
    den = q.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v
