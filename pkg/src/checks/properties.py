"""Evaluator-level property checks: route agreement, closed forms, lambda_1 rules, series algebra."""

import logging
import random
from fractions import Fraction
from itertools import combinations_with_replacement, permutations
from typing import Iterator

from evaluator.brackets import EvalRoute, evaluate, lambda_bracket
from evaluator.closed_form import psi_closed_g1, psi_multinomial_g0
from evaluator.keys import IntersectionKey, enumerate_keys, is_stable, lenient_key
from indexing.multiindex import Kind, MultiIndex, indices_of_weight
from series.generating import exponent_vectors
from series.identities import IdentityReport, compare_series
from series.truncated import TruncatedSeries, series_exp, series_log, series_mul, series_partial

logger = logging.getLogger(__name__)

ONE_24 = Fraction(1, 24)


def _key_monomial(key: IntersectionKey) -> dict[str, int]:
    named = {f"tau{i}": k for i, k in key.m.entries}
    named.update({f"kappa{i}": k for i, k in key.p.entries})
    return named


def check_routes(n_max: int, dim_max: int) -> IdentityReport:
    """Splitting recursion == puncture/dilaton (== closed form on pure psi keys)."""
    report = IdentityReport("routes")
    for g in (0, 1):
        for key in enumerate_keys(g, n_max, dim_max):
            value = evaluate(key, EvalRoute.SPLITTING)
            report.record(_key_monomial(key) | {"genus": g}, value,
                          evaluate(key, EvalRoute.PUNCTURE_DILATON), f"{key} puncture-dilaton")
            if key.is_pure_psi:
                report.record(_key_monomial(key) | {"genus": g}, value,
                              evaluate(key, EvalRoute.CLOSED_FORM), f"{key} closed-form")
    logger.info("routes: %d comparisons, passed=%s", report.checked, report.passed)
    return report


def check_psi_multinomial(max_points: int) -> IdentityReport:
    """Genus 0 pure psi brackets against the multinomial formula for n <= max_points."""
    report = IdentityReport("psi-multinomial-g0")
    for n in range(3, max_points + 1):
        for psi in combinations_with_replacement(range(n - 2), n):
            if sum(psi) != n - 3:
                continue
            key = IntersectionKey(0, MultiIndex.from_points(Kind.S0, list(psi)), MultiIndex.zero(Kind.S1))
            report.record(_key_monomial(key), psi_multinomial_g0(psi), evaluate(key), str(key))
    return report


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``total``."""
    if total == 0:
        yield ()
        return
    for head in range(1, total + 1):
        for rest in _compositions(total - head):
            yield (head,) + rest


def _b_monomial(b: tuple[int, ...]) -> dict[str, int]:
    return {f"b{i + 1}": v for i, v in enumerate(b)}


def _g1_bracket(b: tuple[int, ...]) -> Fraction:
    """<tau_0^(sum b - k) tau_b1 ... tau_bk>_1 through the splitting recursion."""
    m = MultiIndex.from_points(Kind.S0, [0] * (sum(b) - len(b)) + list(b))
    key = lenient_key(1, m, MultiIndex.zero(Kind.S1))
    return evaluate(key) if key is not None else Fraction(0)


def check_closed_form_properties(max_sum: int) -> IdentityReport:
    """The four properties that pin down f_k, plus f_k against the recursion.

    f_1 = 1/24; f_k is symmetric; f_k(b) = sum_i f_k(b - delta_i) when
    every b_i >= 2; f_k(b', 1) = (sum b') f_{k-1}(b').
    """
    report = IdentityReport("closed-form-g1")
    seen_sorted: set[tuple[int, ...]] = set()
    for total in range(1, max_sum + 1):
        for b in _compositions(total):
            value = psi_closed_g1(b)
            monomial = _b_monomial(b)
            canonical = tuple(sorted(b))
            if canonical not in seen_sorted:
                seen_sorted.add(canonical)
                report.record(monomial, _g1_bracket(canonical), value, "recursion")
            if len(b) == 1:
                report.record(monomial, ONE_24, value, "f_1 = 1/24")
            if len(b) <= 4:
                for perm in set(permutations(b)):
                    report.record(monomial, value, psi_closed_g1(perm), "symmetry")
            else:
                report.record(monomial, value, psi_closed_g1(b[::-1]), "symmetry")
            if all(x >= 2 for x in b):
                lowered = sum(psi_closed_g1(b[:i] + (b[i] - 1,) + b[i + 1:]) for i in range(len(b)))
                report.record(monomial, lowered, value, "lowering")
            if len(b) >= 2 and b[-1] == 1:
                report.record(monomial, sum(b[:-1]) * psi_closed_g1(b[:-1]), value, "trailing one")
    logger.info("closed form: %d comparisons, passed=%s", report.checked, report.passed)
    return report


def check_lambda_relations(n_max: int, kappa_weight_max: int) -> IdentityReport:
    """lambda_1 vanishes in genus 0 and squares to 0; one lambda_1 in genus 1 is (1/24) genus 0 with two more tau_0."""
    report = IdentityReport("lambda")
    for g in (0, 1):
        for n in range(0, n_max + 1):
            if not is_stable(g, n):
                continue
            for weight in range(kappa_weight_max + 1):
                for p in indices_of_weight(Kind.S1, weight, range(1, weight + 1)):
                    monomial = {f"kappa{i}": k for i, k in p.entries} | {"genus": g, "n": n}
                    for r in (1, 2, 3):
                        expected = Fraction(0)
                        if g == 1 and r == 1 and weight + 1 == n:
                            key = lenient_key(0, MultiIndex.delta(Kind.S0, 0, n + 2), p)
                            expected = ONE_24 * evaluate(key, EvalRoute.PUNCTURE_DILATON) if key else Fraction(0)
                        report.record(monomial | {"r": r}, expected, lambda_bracket(p, r, n, g), f"r={r}")
    return report


def _random_series(rng: random.Random, variables: tuple[str, ...], degree: int,
                   with_constant: bool = True) -> TruncatedSeries:
    terms = []
    for exponents in exponent_vectors(len(variables), degree):
        if not with_constant and not any(exponents):
            continue
        if rng.random() < 0.5:
            terms.append((exponents, Fraction(rng.randint(-5, 5), rng.randint(1, 4))))
    return TruncatedSeries.from_terms(variables, degree, terms)


def check_product_rule(seed: int, trials: int, degree: int = 4) -> IdentityReport:
    """d(fg) = (df)g + f(dg) and exp(log(1 + f)) = 1 + f on random small series."""
    rng = random.Random(seed)
    variables = ("t0", "t1", "s1")
    report = IdentityReport("product-rule")
    for _ in range(trials):
        f = _random_series(rng, variables, degree)
        g = _random_series(rng, variables, degree)
        for v in variables:
            lhs = series_partial(series_mul(f, g), v)
            rhs = series_mul(series_partial(f, v), g) + series_mul(f, series_partial(g, v))
            report.merge(compare_series(report.name, lhs, rhs, f"d/d{v}"))
        h = _random_series(rng, variables, degree, with_constant=False)
        report.merge(compare_series(report.name, series_exp(series_log(h + 1)), h + 1, "exp(log)"))
    return report
