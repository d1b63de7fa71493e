from fractions import Fraction

import pytest

from indexing import Kind, MultiIndex, SeriesError
from evaluator import bracket
from series import (
    TruncatedSeries,
    build_F,
    build_H,
    build_K,
    check_annihilators,
    check_charge,
    check_genus_one_relation,
    check_kappa_log,
    coefficient_value,
    kappa_derivative,
    series_exp,
    series_log,
    series_mul,
    series_partial,
    tau_derivative,
)

T0 = ("t0",)


def test_h0_starts_with_t0_cubed():
    h = build_H(0, 0, 0, 3)
    assert len(h) == 1
    assert h.coefficient({"t0": 3}) == Fraction(1, 6)


def test_h1_low_coefficients():
    h = build_H(1, 1, 1, 2)
    assert h.coefficient({"t1": 1}) == Fraction(1, 24)
    # <kappa_1>_1 lives on M_{1,1}, so it needs one t0
    assert h.coefficient({"t0": 1, "s1": 1}) == Fraction(1, 24)
    assert h.coefficient({"s1": 1}) == 0
    assert h.coefficient({"t1": 1, "s1": 1}) == 0
    assert h.constant_term == 0


def test_build_f_and_k():
    f = build_F(1, 2, 3)
    assert f.variables == ("t0", "t1", "t2")
    assert f.coefficient({"t0": 1, "t2": 1}) == Fraction(1, 24)
    k = build_K(0, 1, 7)
    assert k.variables == ("x", "s1")
    assert k.coefficient({"x": 3}) == Fraction(1, 6)
    # <tau_0^4 kappa_1>_0 / 4! and <tau_0^5 kappa_1^2>_0 / (5! 2!)
    assert k.coefficient({"x": 4, "s1": 1}) == Fraction(1, 24)
    assert k.coefficient({"x": 5, "s1": 2}) == Fraction(5, 240)


def test_coefficient_value_undoes_factorials():
    h = build_H(0, 1, 1, 7)
    exponents = h.exponents_for({"t0": 5, "s1": 2})
    assert coefficient_value(h, exponents, 1) == 5


def test_nested_bounds_agree():
    small = build_H(1, 1, 1, 3)
    big = build_H(1, 2, 2, 4)
    assert big.restrict(small.variables).truncate(3) == small


def test_kappa_derivative_matches_extra_insertion():
    d = kappa_derivative(0, 2, 1, 1, 5)
    assert d.coefficient({"t0": 5}) == bracket(0, MultiIndex.delta(Kind.S0, 0, 5), MultiIndex.delta(Kind.S1, 2)) / 120
    assert d.coefficient({"t0": 5}) == Fraction(1, 120)


def test_tau_derivative_matches_series_derivative_inside_window():
    h = build_H(0, 2, 1, 6)
    assert series_partial(h, "t1") == tau_derivative(0, 1, 2, 1, 5)


def test_series_log_of_one_is_zero():
    one = TruncatedSeries.constant(T0, 4, 1)
    assert series_log(one).is_zero()


def test_third_derivative_of_t0_cubed():
    h = TruncatedSeries.monomial(T0, 3, {"t0": 3}, Fraction(1, 6))
    third = series_partial(series_partial(series_partial(h, "t0"), "t0"), "t0")
    assert third == TruncatedSeries.constant(T0, 0, 1)


def test_exp_log_inverse():
    f = TruncatedSeries.from_terms(T0, 6, [((0,), 1), ((1,), 1)])
    assert series_exp(series_log(f)) == f


def test_constant_term_preconditions():
    with pytest.raises(SeriesError):
        series_exp(TruncatedSeries.constant(T0, 3, 1))
    with pytest.raises(SeriesError):
        series_log(TruncatedSeries.zero(T0, 3))


def test_mixed_precision_works_to_smaller_degree():
    a = TruncatedSeries.from_terms(T0, 5, [((1,), 1)])
    b = TruncatedSeries.from_terms(T0, 2, [((1,), 1)])
    product = series_mul(a, b)
    assert product.max_degree == 2
    assert product.coefficient((2,)) == 1


def test_coefficient_above_precision_raises():
    with pytest.raises(SeriesError):
        TruncatedSeries.zero(T0, 2).coefficient((3,))


def test_variable_mismatch():
    with pytest.raises(SeriesError):
        TruncatedSeries.zero(T0, 2) + TruncatedSeries.zero(("x",), 2)


def test_json_order_is_graded_lexicographic():
    h = build_H(0, 1, 0, 5)
    rows = h.to_json()
    degrees = [sum(row["exponents"].values()) for row in rows]
    assert degrees == sorted(degrees)
    assert rows[0] == {"exponents": {"t0": 3}, "coefficient": "1/6"}
    assert TruncatedSeries.from_json(h.variables, h.max_degree, rows) == h


@pytest.mark.parametrize("g", [0, 1])
def test_charge_conservation(g):
    report = check_charge(g, 3, 3, 6)
    assert report.passed
    assert report.checked > 0


def test_genus_one_relation_small():
    report = check_genus_one_relation(2, 2, 5)
    assert report.passed, report.to_dict()


@pytest.mark.slow
def test_genus_one_relation_full_window():
    report = check_genus_one_relation(3, 3, 6)
    assert report.passed, report.to_dict()
    assert report.max_discrepancy == 0


def test_kappa_log():
    assert check_kappa_log(3, 6).passed


@pytest.mark.parametrize("g", [0, 1])
def test_annihilators(g):
    report = check_annihilators(g, 2, 2, 5)
    assert report.passed, report.to_dict()


@pytest.mark.slow
@pytest.mark.parametrize("g", [0, 1])
def test_annihilators_full_window(g):
    assert check_annihilators(g, 3, 3, 6).passed


def test_dropping_genus_zero_constant_is_detected():
    report = check_annihilators(0, 2, 2, 5, include_constants=False)
    assert not report.passed
    lowest = [v for v in report.violations if v.monomial == {"t0": 2} and v.detail == "puncture"]
    assert lowest and lowest[0].actual == Fraction(-1, 2)


def test_dropping_genus_one_constant_is_detected():
    report = check_annihilators(1, 1, 1, 4, include_constants=False)
    assert not report.passed
