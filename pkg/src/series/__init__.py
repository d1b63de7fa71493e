"""Truncated power series, the generating functions H_g and their identity checks."""

from .generating import build_F, build_H, build_K, coefficient_value, kappa_derivative, tau_derivative
from .identities import (
    IdentityReport,
    Violation,
    annihilator_residuals,
    check_annihilators,
    check_charge,
    check_genus_one_relation,
    check_kappa_log,
    compare_series,
)
from .truncated import TruncatedSeries, series_exp, series_log, series_mul, series_partial

__all__ = [
    "TruncatedSeries", "series_mul", "series_partial", "series_exp", "series_log",
    "build_H", "build_F", "build_K", "kappa_derivative", "tau_derivative", "coefficient_value",
    "IdentityReport", "Violation", "compare_series", "check_charge", "check_genus_one_relation",
    "check_kappa_log", "check_annihilators", "annihilator_residuals",
]
