"""Closed formulas for pure psi brackets."""

from fractions import Fraction
from itertools import product
from typing import Sequence

from indexing.errors import InvalidIndexError
from indexing.rationals import ZERO, factorial, multinomial

ONE_24 = Fraction(1, 24)


def psi_multinomial_g0(b: Sequence[int]) -> Fraction:
    """<tau_{b_1} ... tau_{b_n}>_0 = (sum b)! / prod b_i!, zero off-dimension."""
    if len(b) < 3:
        raise InvalidIndexError(f"genus 0 needs at least 3 points, got {len(b)}")
    if any(x < 0 for x in b):
        raise InvalidIndexError(f"psi exponents must be nonnegative: {list(b)}")
    if sum(b) != len(b) - 3:
        return ZERO
    return Fraction(multinomial(b))


def psi_closed_g1(b: Sequence[int]) -> Fraction:
    """f_k(b) = <tau_0^{||b|| - k} tau_{b_1} ... tau_{b_k}>_1 for b_i >= 1.

    f_k(b) = [b]/24 - (1/24) sum over eps in {0,1}^k, ||eps|| >= 2, of
    (||eps|| - 2)! [b - eps], where [.] vanishes on negative entries.
    """
    if not b:
        raise InvalidIndexError("f_k needs at least one argument")
    if any(x < 1 for x in b):
        raise InvalidIndexError(f"f_k arguments must be >= 1: {list(b)}")
    correction = 0
    for eps in product((0, 1), repeat=len(b)):
        weight = sum(eps)
        if weight < 2:
            continue
        correction += factorial(weight - 2) * multinomial(x - e for x, e in zip(b, eps))
    return ONE_24 * (multinomial(b) - correction)
