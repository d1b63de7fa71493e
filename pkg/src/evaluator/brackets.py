"""Public entry points: evaluate a bracket by any route, kappa and lambda_1 brackets."""

import logging
from enum import Enum
from fractions import Fraction

from evaluator import puncture, recursion
from evaluator.closed_form import psi_closed_g1, psi_multinomial_g0
from evaluator.keys import IntersectionKey, check_genus, is_stable, require_key
from indexing.errors import InvalidIndexError, UnstableError
from indexing.multiindex import Kind, MultiIndex
from indexing.rationals import ZERO

logger = logging.getLogger(__name__)

ONE_24 = Fraction(1, 24)


class EvalRoute(str, Enum):
    SPLITTING = "splitting"
    PUNCTURE_DILATON = "puncture-dilaton"
    CLOSED_FORM = "closed-form"


def evaluate(key: IntersectionKey, route: EvalRoute = EvalRoute.SPLITTING) -> Fraction:
    """Value of a validated key by the chosen route."""
    if route is EvalRoute.SPLITTING:
        return recursion.eval_g0(key) if key.genus == 0 else recursion.eval_g1(key)
    if route is EvalRoute.PUNCTURE_DILATON:
        return puncture.eval_puncture_dilaton(key)
    if not key.is_pure_psi:
        raise InvalidIndexError(f"closed forms cover pure psi brackets only, got {key}")
    points = key.m.points()
    if key.genus == 0:
        return psi_multinomial_g0(points)
    return psi_closed_g1([b for b in points if b])


def bracket(g: int, m: MultiIndex, p: MultiIndex | None = None,
            route: EvalRoute = EvalRoute.SPLITTING) -> Fraction:
    """<tau^m kappa^p>_g: 0 off-dimension, UnstableError when M_{g,n} is unstable."""
    p = p if p is not None else MultiIndex.zero(Kind.S1)
    key = require_key(g, m, p)
    if key is None:
        return ZERO
    return evaluate(key, route)


def kappa_bracket(p: MultiIndex, g: int, route: EvalRoute = EvalRoute.SPLITTING) -> Fraction:
    """Pure kappa bracket in the n = |p| + 3 - 3g convention: <tau_0^n kappa^p>_g."""
    check_genus(g)
    n = p.weighted_degree + 3 - 3 * g
    if n < 0 or not is_stable(g, n):
        raise UnstableError(IntersectionKey.stability_message(g, max(n, 0)))
    return bracket(g, MultiIndex.delta(Kind.S0, 0, n), p, route)


def lambda_bracket(p: MultiIndex, r: int, n: int, g: int) -> Fraction:
    """<kappa^p lambda_1^r tau_0^n>_g.

    lambda_1 vanishes in genus 0; in genus 1 a single lambda_1 turns into
    (1/24) <kappa^p tau_0^{n+2}>_0 and higher powers vanish.
    """
    check_genus(g)
    if r < 0 or n < 0:
        raise InvalidIndexError(f"r and n must be nonnegative, got r={r}, n={n}")
    if p.kind is not Kind.S1:
        raise InvalidIndexError("lambda_bracket needs kappa exponents in S1")
    if not is_stable(g, n):
        raise UnstableError(IntersectionKey.stability_message(g, n))
    if p.weighted_degree + r != 3 * g - 3 + n:
        return ZERO
    tau0 = MultiIndex.delta(Kind.S0, 0, n)
    if r == 0:
        return bracket(g, tau0, p)
    if g == 0 or r >= 2:
        return ZERO
    return ONE_24 * bracket(0, tau0.plus(0, 2), p)
