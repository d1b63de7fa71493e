"""Splitting recursions for genus 0 and genus 1 brackets.

Genus 0 removes the largest tau index a >= 1 against two spectators k, l
(the two smallest remaining indices), or, when only tau_0 remain, the
largest kappa index. The genus 1 relations need no spectators. Every
kappa_0 produced on the way is replaced by the scalar 2g - 2 + n of the
bracket it sits in; it never enters a MultiIndex.

Base cases: <tau_0^3>_0 = 1 and, through the 1/24 terms, <tau_1>_1 = 1/24.
"""

import logging
from fractions import Fraction

from evaluator.cache import MemoTable
from evaluator.keys import IntersectionKey, lenient_key
from indexing.errors import InvalidIndexError
from indexing.multiindex import Kind, MultiIndex, split_enumerate
from indexing.rationals import ONE, ZERO

logger = logging.getLogger(__name__)

ONE_24 = Fraction(1, 24)

_G0 = MemoTable[IntersectionKey, Fraction]("splitting-g0")
_G1 = MemoTable[IntersectionKey, Fraction]("splitting-g1")


def clear_caches():
    _G0.clear()
    _G1.clear()


def cache_sizes() -> dict[str, int]:
    return {"g0": len(_G0), "g1": len(_G1)}


def _g0(m: MultiIndex, p: MultiIndex) -> Fraction:
    key = lenient_key(0, m, p)
    return eval_g0(key) if key is not None else ZERO


def _g1(m: MultiIndex, p: MultiIndex) -> Fraction:
    key = lenient_key(1, m, p)
    return eval_g1(key) if key is not None else ZERO


def _g0_lowered_kappa(m: MultiIndex, p: MultiIndex, a: int) -> Fraction:
    """<tau^m kappa^p kappa_{a-1}>_0, with kappa_0 = ||m|| - 2."""
    if a == 1:
        scalar = m.total_count - 2
        return scalar * _g0(m, p) if scalar else ZERO
    return _g0(m, p.plus(a - 1))


def eval_g0(key: IntersectionKey) -> Fraction:
    """Genus 0 bracket through the splitting recursion (memoized)."""
    if key.genus != 0:
        raise InvalidIndexError(f"eval_g0 needs a genus 0 key, got {key}")
    cached = _G0.get(key)
    if cached is not None:
        return cached
    value = _compute_g0(key.m, key.p)
    _G0.store(key, value)
    return value


def _compute_g0(m: MultiIndex, p: MultiIndex) -> Fraction:
    points = m.points()
    zero_s0 = MultiIndex.zero(Kind.S0)

    if points[-1] >= 1:
        a = points[-1]
        rest = m.minus(a)
        k, l = rest.points()[:2]
        spectators = zero_s0.plus(k).plus(l).plus(0)
        base = rest.minus(k).minus(l)
        total = ZERO
        for m1, m2, c1 in split_enumerate(base):
            for p1, p2, c2 in split_enumerate(p):
                right = _g0(m2.plus(a - 1).plus(0), p2)
                if not right:
                    continue
                left = _g0(m1 + spectators, p1)
                if left:
                    total += c1 * c2 * left * right
        return total

    if p.is_zero():
        # only tau_0 and no kappa: the dimension equation leaves <tau_0^3>_0
        return ONE

    a = p.positions[-1]
    rest_p = p.minus(a)
    base = m.minus(0, 2)
    total = ZERO
    for m1, m2, c1 in split_enumerate(base):
        for p1, p2, c2 in split_enumerate(rest_p):
            right = _g0_lowered_kappa(m2.plus(0), p2, a)
            if not right:
                continue
            left = _g0(m1.plus(0, 3), p1)
            if left:
                total += c1 * c2 * left * right
    return total


def eval_g1(key: IntersectionKey) -> Fraction:
    """Genus 1 bracket through the splitting recursion (memoized).

    Genus 0 sub-brackets are delegated to eval_g0.
    """
    if key.genus != 1:
        raise InvalidIndexError(f"eval_g1 needs a genus 1 key, got {key}")
    cached = _G1.get(key)
    if cached is not None:
        return cached
    value = _compute_g1(key.m, key.p)
    _G1.store(key, value)
    return value


def _compute_g1(m: MultiIndex, p: MultiIndex) -> Fraction:
    points = m.points()

    if points[-1] >= 1:
        a = points[-1]
        base = m.minus(a)
        total = ONE_24 * _g0(base.plus(0, 2).plus(a - 1), p)
        for m1, m2, c1 in split_enumerate(base):
            for p1, p2, c2 in split_enumerate(p):
                right = _g0(m2.plus(0).plus(a - 1), p2)
                if not right:
                    continue
                left = _g1(m1.plus(0), p1)
                if left:
                    total += c1 * c2 * left * right
        return total

    if p.is_zero():
        raise InvalidIndexError("a genus 1 bracket of tau_0 alone is never a valid key")

    a = p.positions[-1]
    rest_p = p.minus(a)
    total = ONE_24 * _g0_lowered_kappa(m.plus(0, 2), rest_p, a)
    for m1, m2, c1 in split_enumerate(m):
        for p1, p2, c2 in split_enumerate(rest_p):
            right = _g0_lowered_kappa(m2.plus(0), p2, a)
            if not right:
                continue
            left = _g1(m1.plus(0), p1)
            if left:
                total += c1 * c2 * left * right
    return total
