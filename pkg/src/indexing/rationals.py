"""Exact rationals and the integer combinatorics every recursion consumes."""

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial as _factorial
from typing import Iterable

from indexing.errors import InvalidIndexError

# Every bracket value is one of these; Fraction keeps gcd(num, den) = 1 and den > 0.
ExactRational = Fraction

ONE = Fraction(1)
ZERO = Fraction(0)


@lru_cache(maxsize=512)
def factorial(n: int) -> int:
    """n! with a small memo table for the sizes the recursions revisit."""
    if n < 0:
        raise InvalidIndexError(f"factorial of negative integer {n}")
    return _factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(parts: Iterable[int]) -> int:
    """(b1 + ... + bk)! / (b1! ... bk!), zero when any entry is negative."""
    parts = list(parts)
    if any(b < 0 for b in parts):
        return 0
    result = factorial(sum(parts))
    for b in parts:
        result //= factorial(b)
    return result


def format_rational(value: Fraction) -> str:
    """Render as `p/q`, or `p` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse `p/q` or `p` (surrounding whitespace allowed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidIndexError(f"not a rational number: {text!r}") from e
