"""Exact integer helpers shared by the counting and bound modules.

Counts are plain Python ints (arbitrary precision already); ExactInt is an
alias documenting that intent. The helpers pin down the edge conventions the
summation loops rely on.
"""

import math

ExactInt = int


def pow2(e: int) -> int:
    """2**e for e >= 0."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return 1 << e


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, 0) = 1 and 0 whenever n < 0 or k > n."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n < 0 or k > n:
        return 0
    return math.comb(n, k)


def floor_quot(x: int, d: int) -> int:
    """floor(x / d) for x >= 0, d >= 1."""
    if d < 1:
        raise ValueError(f"divisor must be >= 1, got {d}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return x // d
