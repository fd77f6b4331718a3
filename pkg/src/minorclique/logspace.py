"""Base-2 logarithms of huge positive counts, with an exact-zero flag.

The bound formulas multiply binomials by factors like 2^(8*sqrt(t)*...),
far beyond float range, so every formula is evaluated as a LogValue.
Quantities multiply by adding logs and add by log-sum-exp; a count of zero
(empty binomial) is carried as a flag, not as -inf arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

LN2 = math.log(2.0)
EXACT_BINOMIAL_LIMIT = 10_000


@dataclass(frozen=True)
class LogValue:
    """log2 of a positive quantity, or the exact zero quantity."""

    log2: float
    zero: bool = False

    @classmethod
    def ZERO(cls) -> "LogValue":
        return cls(float("-inf"), True)

    @classmethod
    def one(cls) -> "LogValue":
        return cls(0.0)

    @classmethod
    def from_count(cls, n: int) -> "LogValue":
        if n < 0:
            raise ValueError("counts are nonnegative")
        if n == 0:
            return cls.ZERO()
        return cls(math.log2(n))

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.zero or other.zero:
            return LogValue.ZERO()
        return LogValue(self.log2 + other.log2)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.zero:
            raise ZeroDivisionError("division by exact-zero LogValue")
        if self.zero:
            return LogValue.ZERO()
        return LogValue(self.log2 - other.log2)

    def __add__(self, other: "LogValue") -> "LogValue":
        if self.zero:
            return other
        if other.zero:
            return self
        hi, lo = (self.log2, other.log2) if self.log2 >= other.log2 else (other.log2, self.log2)
        return LogValue(hi + math.log1p(2.0 ** (lo - hi)) / LN2)

    def scaled(self, bits: float) -> "LogValue":
        """Multiply the quantity by 2**bits."""
        if self.zero:
            return self
        return LogValue(self.log2 + bits)

    def _key(self) -> float:
        return float("-inf") if self.zero else self.log2

    def __lt__(self, other):
        return self._key() < other._key()

    def __le__(self, other):
        return self._key() <= other._key()

    def __gt__(self, other):
        return self._key() > other._key()

    def __ge__(self, other):
        return self._key() >= other._key()


def log2_factorial(m: int) -> float:
    if m < 0:
        raise ValueError("factorial of a negative number")
    if m <= 20:
        return math.log2(math.factorial(m))
    return math.lgamma(m + 1) / LN2


def log_binomial(n: int, k: int) -> LogValue:
    """log2 of C(n, k) for integer arguments; exact-zero flagged when C(n,k) = 0.

    Uses the exact big-integer path for n <= 10^4 (also the cross-check
    oracle for the lgamma path) and log-gamma beyond.
    """
    if k < 0 or n < 0 or k > n:
        return LogValue.ZERO()
    if n <= EXACT_BINOMIAL_LIMIT:
        return LogValue(math.log2(math.comb(n, k)))
    return LogValue((math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / LN2)


def real_log_binomial(x: float, m: int) -> LogValue:
    """log2 of the generalized binomial C(x, m) = prod_{i<m} (x-i) / m!.

    Defined for real x >= m; by convention C(x, m) with x < m is the exact
    zero quantity (the falling product is not used past its positive range),
    and m < 0 likewise gives zero.
    """
    if m < 0:
        return LogValue.ZERO()
    if m == 0:
        return LogValue.one()
    if x < m:
        return LogValue.ZERO()
    if m <= 4096:
        acc = 0.0
        for i in range(m):
            acc += math.log2(x - i)
        return LogValue(acc - log2_factorial(m))
    lg = math.lgamma(x + 1) - math.lgamma(x - m + 1)
    return LogValue(lg / LN2 - log2_factorial(m))


def log_sum(values) -> LogValue:
    """Sum quantities given as LogValues (order-insensitive up to float noise)."""
    total = LogValue.ZERO()
    for v in values:
        total = total + v
    return total
