"""Puncture/dilaton reduction, valid in every genus.

Dilaton removes a tau_a with a >= 1 and trades it for kappa_{|j|+a-1};
once only tau_0 remain, puncture removes a tau_0 and trades kappa^j for
kappa_{|j|-1}. Reduction stops on M_{0,3} (<tau_0^3>_0 = 1) or M_{1,1},
where <tau_1>_1 = <tau_0 kappa_1>_1 = 1/24.
"""

from fractions import Fraction

from evaluator.cache import MemoTable
from evaluator.keys import IntersectionKey, lenient_key
from indexing.multiindex import MultiIndex, split_enumerate
from indexing.rationals import ONE, ZERO

ONE_24 = Fraction(1, 24)

_PD = MemoTable[IntersectionKey, Fraction]("puncture-dilaton")


def clear_cache():
    _PD.clear()


def _pd(g: int, m: MultiIndex, p: MultiIndex) -> Fraction:
    key = lenient_key(g, m, p)
    return eval_puncture_dilaton(key) if key is not None else ZERO


def eval_puncture_dilaton(key: IntersectionKey) -> Fraction:
    """Bracket value by eliminating every tau insertion."""
    cached = _PD.get(key)
    if cached is not None:
        return cached
    value = _reduce(key)
    _PD.store(key, value)
    return value


def _reduce(key: IntersectionKey) -> Fraction:
    g, m, p = key.genus, key.m, key.p
    n = key.n

    if g == 1 and n == 1:
        return ONE_24
    if g == 0 and n == 3:
        return ONE

    # kappa_0 on the target space M_{g,n-1}
    kappa0 = 2 * g - 2 + (n - 1)
    a = m.positions[-1]
    rest = m.minus(a)
    total = ZERO

    if a >= 1:
        for j, remaining, c in split_enumerate(p):
            target = j.weighted_degree + a - 1
            if target == 0:
                total += c * kappa0 * _pd(g, rest, remaining)
            else:
                total += c * _pd(g, rest, remaining.plus(target))
        return total

    for j, remaining, c in split_enumerate(p):
        if j.is_zero():
            continue
        target = j.weighted_degree - 1
        if target == 0:
            total += c * kappa0 * _pd(g, rest, remaining)
        else:
            total += c * _pd(g, rest, remaining.plus(target))
    return total
