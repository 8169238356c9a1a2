"""Alternating blue-red string values and their Jacobsthal numerators.

A string of n edges, blue at the ground and alternating upward, is worth
1 - 1/2 + 1/4 - ... (n terms).  The numerators of those partial sums are
the Jacobsthal numbers, giving the closed form used throughout:
string_value(n) = jacobsthal(n) / 2^(n-1).
"""

from __future__ import annotations

from functools import lru_cache

from chocgame.dyadic import Dyadic
from chocgame.engine import GameTree


def jacobsthal(n: int) -> int:
    """J_n = (2^n - (-1)^n) / 3, so 0, 1, 1, 3, 5, 11, 21, ..."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    return ((1 << n) - (-1) ** n) // 3


def jacobsthal_recursive(n: int) -> int:
    """Same sequence by the recursion J_{k+1} = 2 J_k + (-1)^k.

    Kept as an independent route for cross-checking the closed form.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    value = 0
    for k in range(n):
        value = 2 * value + (-1) ** k
    return value


@lru_cache(maxsize=None)
def hackenbush_value(n: int) -> Dyadic:
    """Value of the alternating string with n edges; 0 for the empty one."""
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n == 0:
        return Dyadic(0)
    return Dyadic(jacobsthal(n), n - 1)


@lru_cache(maxsize=None)
def string_tree(length: int) -> GameTree:
    """Explicit game tree of the alternating string.

    Chopping a blue edge leaves the even-length prefixes, a red edge the
    odd-length ones, so Left's options are every even length below and
    Right's every odd length below.
    """
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    left = (string_tree(k) for k in range(0, length, 2))
    right = (string_tree(k) for k in range(1, length, 2))
    return GameTree(left, right)
