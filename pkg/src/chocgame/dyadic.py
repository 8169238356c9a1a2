"""Exact dyadic rationals (p / 2^j) and the simplest-number rule.

All game values in this package are dyadic, so this is the only numeric
type the rest of the code needs.  Values are normalized on construction
(odd numerator unless the exponent is zero) and immutable.  No floats
anywhere on the exact path; ``to_float`` exists only for approximate
display.
"""

from __future__ import annotations

import re
from typing import Optional

# Exponents are capped so a runaway computation fails loudly instead of
# silently producing astronomically fine fractions.  Desk-scale sweeps
# (n + m <= 20) need exponents below 20.
EXPONENT_LIMIT = 64


class DyadicOverflowError(OverflowError):
    """Exponent grew past EXPONENT_LIMIT; the computation is out of scale."""


class BoundsViolation(ValueError):
    """simplest_between was called with lo >= hi."""


class Dyadic:
    """An exact dyadic rational numerator / 2^exponent, kept normalized."""

    __slots__ = ("numerator", "exponent")

    numerator: int
    exponent: int

    def __init__(self, numerator: int, exponent: int = 0):
        if exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {exponent}")
        if numerator == 0:
            exponent = 0
        else:
            # strip common factors of two: (n & -n) isolates the lowest set bit
            shift = min(exponent, (numerator & -numerator).bit_length() - 1)
            numerator >>= shift
            exponent -= shift
        if exponent > EXPONENT_LIMIT:
            raise DyadicOverflowError(
                f"exponent {exponent} exceeds limit {EXPONENT_LIMIT}"
            )
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic values are immutable")

    # ----- arithmetic -----

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        j = max(self.exponent, other.exponent)
        num = (self.numerator << (j - self.exponent)) + (
            other.numerator << (j - other.exponent)
        )
        return Dyadic(num, j)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.numerator, self.exponent)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.numerator), self.exponent)

    # ----- total order -----

    def _scaled(self, other: "Dyadic") -> tuple[int, int]:
        # cross-multiplied comparands: p/2^i vs q/2^j  <=>  p<<j vs q<<i
        return self.numerator << other.exponent, other.numerator << self.exponent

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other: "Dyadic") -> bool:
        a, b = self._scaled(other)
        return a < b

    def __le__(self, other: "Dyadic") -> bool:
        a, b = self._scaled(other)
        return a <= b

    def __gt__(self, other: "Dyadic") -> bool:
        a, b = self._scaled(other)
        return a > b

    def __ge__(self, other: "Dyadic") -> bool:
        a, b = self._scaled(other)
        return a >= b

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def __bool__(self) -> bool:
        return self.numerator != 0

    # ----- queries -----

    @property
    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def floor(self) -> int:
        # Python's // floors toward -inf, which is what we want
        return self.numerator >> self.exponent

    def ceil(self) -> int:
        return -((-self.numerator) >> self.exponent)

    def to_float(self) -> float:
        """Approximate binary-float value; display only, never exact math."""
        return self.numerator / (1 << self.exponent)

    # ----- text format: "p" or "p/2^j" -----

    _PATTERN = re.compile(r"^\s*([+-]?\d+)(?:/2\^(\d+))?\s*$")

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        match = cls._PATTERN.match(text)
        if match is None:
            raise ValueError(f"not a dyadic literal: {text!r}")
        return cls(int(match.group(1)), int(match.group(2) or 0))

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/2^{self.exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self.numerator}, {self.exponent})"


ZERO = Dyadic(0)
ONE = Dyadic(1)


def _floor_scaled(value: Dyadic, j: int) -> int:
    """floor(value * 2^j) with exact integer arithmetic."""
    if j >= value.exponent:
        return value.numerator << (j - value.exponent)
    return value.numerator >> (value.exponent - j)


def simplest_between(lo: Optional[Dyadic], hi: Optional[Dyadic]) -> Dyadic:
    """The unique simplest dyadic strictly between the bounds.

    Simplest means: the integer of smallest absolute value if any integer
    fits, otherwise the dyadic with the smallest exponent.  A missing
    bound counts as -inf / +inf, matching the canonical forms of integers
    (e.g. a position with no Left options and Right options worth 1 is 0).
    """
    if lo is not None and hi is not None and lo >= hi:
        raise BoundsViolation(f"need lo < hi, got {lo} >= {hi}")

    if lo is None and hi is None:
        return ZERO
    if lo is None:
        assert hi is not None
        if hi > ZERO:
            return ZERO
        # largest integer strictly below hi
        n = hi.floor() - 1 if hi.is_integer() else hi.floor()
        return Dyadic(n)
    if hi is None:
        if lo < ZERO:
            return ZERO
        return Dyadic(lo.floor() + 1)

    # both bounds present: first look for integers strictly inside
    low_int = lo.floor() + 1        # smallest integer > lo
    high_int = hi.ceil() - 1        # largest integer < hi
    if low_int <= high_int:
        if low_int <= 0 <= high_int:
            return ZERO
        return Dyadic(low_int if low_int > 0 else high_int)

    # no integer fits: walk exponents upward; the first grid of halves,
    # quarters, ... that reaches into (lo, hi) contains exactly one point,
    # and its numerator is odd (an even one would have appeared earlier)
    for j in range(1, EXPONENT_LIMIT + 1):
        i = _floor_scaled(lo, j) + 1
        candidate = Dyadic(i, j)
        if candidate < hi:
            return candidate
    raise DyadicOverflowError(
        f"no dyadic with exponent <= {EXPONENT_LIMIT} between {lo} and {hi}"
    )
