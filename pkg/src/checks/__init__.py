"""Verification suites over the evaluator, the series identities and the CohFT potentials."""

from .properties import (
    check_closed_form_properties,
    check_lambda_relations,
    check_product_rule,
    check_psi_multinomial,
    check_routes,
)
from .suites import DEFAULT_POINTS, SuiteResult, annihilator_suite, expect_failure, getzler_suite, run_suite

__all__ = [
    "check_routes", "check_psi_multinomial", "check_closed_form_properties",
    "check_lambda_relations", "check_product_rule",
    "SuiteResult", "DEFAULT_POINTS", "run_suite", "getzler_suite", "annihilator_suite", "expect_failure",
]
