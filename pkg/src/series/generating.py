"""Generating functions H_g, F_g and K_g assembled coefficient by coefficient."""

import logging
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator

from evaluator.brackets import EvalRoute, evaluate
from evaluator.keys import check_genus, lenient_key
from indexing.errors import SeriesError
from indexing.multiindex import Kind, MultiIndex, weight_stats
from series.truncated import Exponents, TruncatedSeries

logger = logging.getLogger(__name__)


def t_variables(t_max_index: int) -> tuple[str, ...]:
    return tuple(f"t{i}" for i in range(t_max_index + 1))


def s_variables(s_max_index: int) -> tuple[str, ...]:
    return tuple(f"s{i}" for i in range(1, s_max_index + 1))


def exponent_vectors(n_vars: int, max_degree: int) -> Iterator[Exponents]:
    """Every exponent vector of total degree <= max_degree."""
    for degree in range(max_degree + 1):
        for combo in combinations_with_replacement(range(n_vars), degree):
            exponents = [0] * n_vars
            for i in combo:
                exponents[i] += 1
            yield tuple(exponents)


def split_exponents(exponents: Exponents, t_max_index: int) -> tuple[MultiIndex, MultiIndex]:
    """Exponent vector over (t0..tT, s1..sS) -> (m, p)."""
    t_part = exponents[:t_max_index + 1]
    s_part = exponents[t_max_index + 1:]
    m = MultiIndex.from_mapping(Kind.S0, {i: k for i, k in enumerate(t_part)})
    p = MultiIndex.from_mapping(Kind.S1, {i + 1: k for i, k in enumerate(s_part)})
    return m, p


def build_H(g: int, t_max_index: int, s_max_index: int, degree: int,
            insert_tau: MultiIndex | None = None, insert_kappa: MultiIndex | None = None,
            route: EvalRoute = EvalRoute.SPLITTING) -> TruncatedSeries:
    """H_g restricted to t0..tT, s1..sS, exact to total degree ``degree``.

    The coefficient of t^m s^p is <tau^(m + insert_tau) kappa^(p + insert_kappa)>_g / (m! p!),
    so the insertions give partial derivatives of H_g (d/dt_a adds tau_a,
    d/ds_a adds kappa_a) that stay exact to the full degree even for
    indices outside the variable window.
    """
    check_genus(g)
    if t_max_index < 0 or s_max_index < 0 or degree < 0:
        raise SeriesError("variable bounds and degree must be nonnegative")
    insert_tau = insert_tau if insert_tau is not None else MultiIndex.zero(Kind.S0)
    insert_kappa = insert_kappa if insert_kappa is not None else MultiIndex.zero(Kind.S1)
    variables = t_variables(t_max_index) + s_variables(s_max_index)

    terms = []
    for exponents in exponent_vectors(len(variables), degree):
        m, p = split_exponents(exponents, t_max_index)
        key = lenient_key(g, m + insert_tau, p + insert_kappa)
        if key is None:
            continue
        value = evaluate(key, route)
        if value:
            terms.append((exponents, value / (weight_stats(m).factorial_product * weight_stats(p).factorial_product)))
    logger.debug("built H_%d on %d variables to degree %d: %d terms", g, len(variables), degree, len(terms))
    return TruncatedSeries.from_terms(variables, degree, terms)


def build_F(g: int, t_max_index: int, degree: int) -> TruncatedSeries:
    """F_g = H_g(t; 0), the psi-only part."""
    return build_H(g, t_max_index, 0, degree)


def build_K(g: int, s_max_index: int, degree: int) -> TruncatedSeries:
    """H_g(x, 0; s) in the variables x, s1..sS."""
    h = build_H(g, 0, s_max_index, degree)
    return TruncatedSeries(("x",) + h.variables[1:], h.max_degree, dict(h.coefficients))


def kappa_derivative(g: int, a: int, t_max_index: int, s_max_index: int, degree: int) -> TruncatedSeries:
    """d H_g / d s_a, supplied by the evaluator."""
    return build_H(g, t_max_index, s_max_index, degree, insert_kappa=MultiIndex.delta(Kind.S1, a))


def tau_derivative(g: int, a: int, t_max_index: int, s_max_index: int, degree: int) -> TruncatedSeries:
    """d H_g / d t_a, supplied by the evaluator."""
    return build_H(g, t_max_index, s_max_index, degree, insert_tau=MultiIndex.delta(Kind.S0, a))


def coefficient_value(series: TruncatedSeries, exponents: Exponents, t_max_index: int) -> Fraction:
    """Undo the 1/(m! p!) normalisation: the bracket behind one coefficient."""
    m, p = split_exponents(exponents, t_max_index)
    return series.coefficient(exponents) * weight_stats(m).factorial_product * weight_stats(p).factorial_product
