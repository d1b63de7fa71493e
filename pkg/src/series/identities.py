"""Machine checks of the generating-function identities.

Each checker returns an IdentityReport; a passing report has no
violations and a max discrepancy of exactly 0 (rational equality, no
tolerance).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from evaluator.keys import check_genus
from indexing.multiindex import Kind, MultiIndex
from indexing.rationals import ZERO, factorial, format_rational
from series.generating import (
    build_H,
    build_K,
    exponent_vectors,
    kappa_derivative,
    s_variables,
    split_exponents,
    t_variables,
    tau_derivative,
)
from series.truncated import TruncatedSeries, series_exp, series_log, series_mul, series_partial

logger = logging.getLogger(__name__)

ONE_24 = Fraction(1, 24)

@dataclass
class Violation:
    """One coefficient where an identity fails."""
    monomial: dict[str, int]
    expected: Fraction
    actual: Fraction
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "monomial": self.monomial,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
            "detail": self.detail,
        }

@dataclass
class IdentityReport:
    """Outcome of one identity check."""
    name: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    max_discrepancy: Fraction = ZERO

    @property
    def passed(self) -> bool:
        return not self.violations and self.max_discrepancy == 0

    def record(self, monomial: dict[str, int], expected: Fraction, actual: Fraction, detail: str = ""):
        self.checked += 1
        gap = abs(expected - actual)
        if gap:
            self.violations.append(Violation(monomial, expected, actual, detail))
            self.max_discrepancy = max(self.max_discrepancy, gap)

    def merge(self, other: "IdentityReport") -> "IdentityReport":
        """Fold another report's counts into this one."""
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.max_discrepancy = max(self.max_discrepancy, other.max_discrepancy)
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": len(self.violations),
            "max_discrepancy": format_rational(self.max_discrepancy),
            "first_counterexample": self.violations[0].to_dict() if self.violations else None,
        }

def _named(series: TruncatedSeries, exponents: tuple[int, ...]) -> dict[str, int]:
    return {v: k for v, k in zip(series.variables, exponents) if k}

def compare_series(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, detail: str = "") -> IdentityReport:
    """Coefficient-wise lhs == rhs over every monomial up to the common precision."""
    report = IdentityReport(name)
    degree = min(lhs.max_degree, rhs.max_degree)
    for exponents in exponent_vectors(len(lhs.variables), degree):
        report.record(_named(lhs, exponents), lhs.coefficient(exponents), rhs.coefficient(exponents), detail)
    return report

def check_charge(g: int, t_max_index: int, s_max_index: int, degree: int) -> IdentityReport:
    """Every stored monomial t^m s^p of H_g has 3(1-g) + sum (i-1) m_i + sum i p_i = 0."""
    check_genus(g)
    h = build_H(g, t_max_index, s_max_index, degree)
    report = IdentityReport(f"charge-g{g}")
    for exponents, _ in h:
        m, p = split_exponents(exponents, t_max_index)
        charge = 3 * (1 - g) + m.weighted_degree - m.total_count + p.weighted_degree
        report.record(_named(h, exponents), ZERO, Fraction(charge), "charge")
    logger.info("charge g=%d: %d monomials checked", g, report.checked)
    return report

def check_genus_one_relation(t_max_index: int, s_max_index: int, degree: int) -> IdentityReport:
    """H_1 = (1/24) log d0^3 H_0 on the restricted variables, exact to ``degree``."""
    h0 = build_H(0, t_max_index, s_max_index, degree + 3)
    third = series_partial(series_partial(series_partial(h0, "t0"), "t0"), "t0")
    rhs = series_log(third).scale(ONE_24)
    lhs = build_H(1, t_max_index, s_max_index, degree)
    report = compare_series("genus1-log", lhs, rhs)
    logger.info("genus one relation: %d coefficients, passed=%s", report.checked, report.passed)
    return report

def check_kappa_log(s_max_index: int, degree: int) -> IdentityReport:
    """K_1 = (1/24) log K_0 with K_0 = d_x^3 H_0(x, 0; s) and K_1 = H_1(x, 0; s)."""
    k0 = build_K(0, s_max_index, degree + 3)
    third = series_partial(series_partial(series_partial(k0, "x"), "x"), "x")
    rhs = series_log(third).scale(ONE_24)
    lhs = build_K(1, s_max_index, degree)
    return compare_series("kappa-log", lhs, rhs)

class _Window:
    """Evaluator-backed derivatives of H_g on a fixed variable window."""

    def __init__(self, g: int, t_max_index: int, s_max_index: int, degree: int):
        self.g = g
        self.t_max_index = t_max_index
        self.s_max_index = s_max_index
        self.degree = degree
        self.variables = t_variables(t_max_index) + s_variables(s_max_index)
        self.h = build_H(g, t_max_index, s_max_index, degree)
        self._dt: dict[int, TruncatedSeries] = {}
        self._ds: dict[int, TruncatedSeries] = {}

    def var(self, name: str, coefficient: Fraction | int = 1) -> TruncatedSeries:
        return TruncatedSeries.monomial(self.variables, self.degree, {name: 1}, coefficient)

    def constant(self, value: Fraction | int) -> TruncatedSeries:
        return TruncatedSeries.constant(self.variables, self.degree, value)

    def zero(self) -> TruncatedSeries:
        return TruncatedSeries.zero(self.variables, self.degree)

    def dt(self, a: int) -> TruncatedSeries:
        if a not in self._dt:
            self._dt[a] = tau_derivative(self.g, a, self.t_max_index, self.s_max_index, self.degree)
        return self._dt[a]

    def ds(self, a: int) -> TruncatedSeries:
        if a not in self._ds:
            self._ds[a] = kappa_derivative(self.g, a, self.t_max_index, self.s_max_index, self.degree)
        return self._ds[a]

    def euler(self) -> TruncatedSeries:
        """kappa_0 = 2g - 2 + n written through charge conservation, applied to H_g."""
        total = self.zero()
        for i in range(self.t_max_index + 1):
            total = total + series_mul(self.var(f"t{i}", Fraction(2 * i + 1, 3)), self.dt(i))
        for i in range(1, self.s_max_index + 1):
            total = total + series_mul(self.var(f"s{i}", Fraction(2 * i, 3)), self.ds(i))
        return total

    def kappa_sum(self, shift: int, min_weight: int) -> TruncatedSeries:
        """sum over j with |j| >= min_weight of s^j / j! * d_{|j| + shift} H_g.

        j runs over the s-variables of the window up to the series degree.
        """
        by_weight: dict[int, list[tuple[tuple[int, ...], Fraction]]] = {}
        n_t = self.t_max_index + 1
        for s_exponents in exponent_vectors(self.s_max_index, self.degree):
            j = MultiIndex.from_mapping(Kind.S1, {i + 1: k for i, k in enumerate(s_exponents)})
            weight = j.weighted_degree
            if weight < min_weight:
                continue
            factorials = 1
            for _, k in j.entries:
                factorials *= factorial(k)
            by_weight.setdefault(weight, []).append(((0,) * n_t + s_exponents, Fraction(1, factorials)))
        total = self.zero()
        for weight, terms in sorted(by_weight.items()):
            target = weight + shift
            if target < 1:
                continue
            polynomial = TruncatedSeries.from_terms(self.variables, self.degree, terms)
            total = total + series_mul(polynomial, self.ds(target))
        return total

def annihilator_residuals(g: int, t_max_index: int, s_max_index: int, degree: int,
                          include_constants: bool = True) -> dict[str, TruncatedSeries]:
    """The three operator families applied to exp(H_g).

    Each operator is first order plus a multiplication term, so
    L exp(H) = (D H + c) exp(H); the returned series are that product,
    exact to ``degree``. d_{-1} is 0, so the t_i d_{i-1} sum starts at i = 1.
    """
    check_genus(g)
    w = _Window(g, t_max_index, s_max_index, degree)
    has_s1 = s_max_index >= 1
    euler = w.euler()
    exp_h = series_exp(w.h)

    # puncture analogue
    first = -w.dt(0) + w.kappa_sum(shift=-1, min_weight=2)
    for i in range(1, t_max_index + 1):
        first = first + series_mul(w.var(f"t{i}"), w.dt(i - 1))
    if has_s1:
        first = first + series_mul(w.var("s1"), euler)
    if include_constants:
        if g == 0:
            first = first + TruncatedSeries.monomial(w.variables, degree, {"t0": 2}, Fraction(1, 2))
        elif has_s1:
            first = first + w.var("s1", ONE_24)

    # dilaton analogue
    second = -w.dt(1) + w.kappa_sum(shift=0, min_weight=1) + euler
    if include_constants and g == 1:
        second = second + w.constant(ONE_24)

    residuals = {
        "puncture": series_mul(first, exp_h),
        "dilaton": series_mul(second, exp_h),
    }
    for a in range(2, max(t_max_index, 2) + 1):
        third = -w.dt(a) + w.kappa_sum(shift=a - 1, min_weight=0)
        residuals[f"higher-a{a}"] = series_mul(third, exp_h)
    return residuals

def check_annihilators(g: int, t_max_index: int, s_max_index: int, degree: int,
                       include_constants: bool = True) -> IdentityReport:
    """Every coefficient of every operator applied to exp(H_g) vanishes up to ``degree``."""
    report = IdentityReport(f"annihilators-g{g}" + ("" if include_constants else "-mutated"))
    zero = TruncatedSeries.zero(t_variables(t_max_index) + s_variables(s_max_index), degree)
    for label, residual in annihilator_residuals(g, t_max_index, s_max_index, degree, include_constants).items():
        report.merge(compare_series(report.name, zero, residual, label))
    logger.info("annihilators g=%d: %d coefficients, passed=%s", g, report.checked, report.passed)
    return report
