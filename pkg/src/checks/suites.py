"""Verification suites behind the `verify` command."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from checks.properties import (
    check_closed_form_properties,
    check_lambda_relations,
    check_product_rule,
    check_psi_multinomial,
    check_routes,
)
from cohft.potentials import (
    CohftPoint,
    PotentialPair,
    check_b_form,
    check_getzler,
    check_u_derivative,
    parse_point,
    potential_from_point,
    tensor,
)
from params import Suite, VerifyParams
from series.identities import (
    IdentityReport,
    check_annihilators,
    check_charge,
    check_genus_one_relation,
    check_kappa_log,
    compare_series,
)
from series.truncated import TruncatedSeries

logger = logging.getLogger(__name__)

# small (s, u) points for the CohFT suite; their pairwise tensors are checked too
DEFAULT_POINTS = (
    CohftPoint.unit(),
    CohftPoint.from_mapping({1: 1}),
    CohftPoint.from_mapping({1: 1}, 2),
    CohftPoint.from_mapping({2: 1}),
    CohftPoint.from_mapping({1: -1}, Fraction(1, 2)),
    CohftPoint.from_mapping({1: Fraction(1, 2), 2: 1}),
    CohftPoint.from_mapping({3: 1}, 1),
    CohftPoint.from_mapping({1: 2}, -1),
    CohftPoint.from_mapping({2: Fraction(-1, 3)}, 3),
    CohftPoint.from_mapping({1: 1, 3: -1}, Fraction(1, 4)),
)


@dataclass
class SuiteResult:
    """All reports produced by one suite run."""
    suite: str
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def to_dict(self) -> dict:
        return {
            "summary": {
                "suite": self.suite,
                "passed": self.passed,
                "checks": len(self.reports),
                "failed": sum(1 for r in self.reports if not r.passed),
                "coefficients": sum(r.checked for r in self.reports),
            },
            "reports": [r.to_dict() for r in self.reports],
        }


def expect_failure(name: str, report: IdentityReport) -> IdentityReport:
    """Turn a report that must fail (a mutation test) into one that passes when it did."""
    caught = IdentityReport(name)
    caught.record({}, Fraction(1), Fraction(0 if report.passed else 1), f"{report.name} must report a violation")
    return caught


def _residual_report(name: str, residual: TruncatedSeries, detail: str) -> IdentityReport:
    return compare_series(name, TruncatedSeries.zero(residual.variables, residual.max_degree), residual, detail)


def getzler_suite(points: list[CohftPoint], order: int) -> list[IdentityReport]:
    """Getzler residual, B-form and u-linearity on ``points`` and their pairwise tensors, plus a mutation."""
    getzler = IdentityReport("getzler")
    b_form = IdentityReport("b-form")
    u_linear = IdentityReport("u-derivative")
    candidates = list(points) + [tensor(a, b) for a, b in combinations(points, 2)]
    for point in candidates:
        residual = check_getzler(potential_from_point(point, order))
        getzler.merge(_residual_report("getzler", residual, str(point.to_dict())))
        b_form.merge(check_b_form(point, order))
    for point in points:
        u_linear.merge(check_u_derivative(point, Fraction(1, 3), order))

    x = ("x",)
    perturbed = PotentialPair(
        TruncatedSeries.monomial(x, order, {"x": 3}, Fraction(1, 6)),
        TruncatedSeries.from_terms(x, order, [((1,), Fraction(1)), ((2,), Fraction(1))]),
        order,
    )
    mutated = _residual_report("getzler-perturbed", check_getzler(perturbed), "perturbed pair")
    logger.info("getzler: %d points, passed=%s", len(candidates), getzler.passed)
    return [getzler, b_form, u_linear, expect_failure("getzler-mutation", mutated)]


def annihilator_suite(t_max: int, s_max: int, degree: int) -> list[IdentityReport]:
    reports = []
    for g in (0, 1):
        reports.append(check_annihilators(g, t_max, s_max, degree))
        mutated = check_annihilators(g, t_max, s_max, degree, include_constants=False)
        reports.append(expect_failure(f"annihilators-mutation-g{g}", mutated))
    return reports


def _points(params: VerifyParams) -> list[CohftPoint]:
    if params.s is None and params.u is None:
        return list(DEFAULT_POINTS)
    return [parse_point(params.s, params.u)]


def run_suite(params: VerifyParams) -> SuiteResult:
    """Run one suite (or all of them) within the given bounds."""
    runners = {
        Suite.ROUTES: lambda: [check_routes(params.n_max, params.dim_max)],
        Suite.CHARGE: lambda: [check_charge(g, params.t_max, params.s_max, params.degree) for g in (0, 1)],
        Suite.GENUS1_LOG: lambda: [check_genus_one_relation(params.t_max, params.s_max, params.degree)],
        Suite.KAPPA_LOG: lambda: [check_kappa_log(params.s_max, params.degree)],
        Suite.ANNIHILATORS: lambda: annihilator_suite(params.t_max, params.s_max, params.degree),
        Suite.GETZLER: lambda: getzler_suite(_points(params), params.order),
        Suite.CLOSED_FORM: lambda: [check_psi_multinomial(params.psi_points),
                                    check_closed_form_properties(params.max_sum)],
        Suite.LAMBDA: lambda: [check_lambda_relations(8, 5)],
        Suite.PRODUCT_RULE: lambda: [check_product_rule(params.seed, params.trials)],
    }
    selected = [s for s in runners if params.suite in (s, Suite.ALL)]
    result = SuiteResult(params.suite.value)
    for suite in selected:
        logger.info("running suite %s", suite.value)
        result.reports.extend(runners[suite]())
    return result
