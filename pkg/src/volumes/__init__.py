"""Weil-Petersson volumes and the Bessel constants of their asymptotics."""

from .bessel import BesselConstants, bessel_constants, bessel_j0, bessel_j1, first_zero_j0
from .weil_petersson import (
    RATIO_LIMITS,
    VolumeRow,
    asymptotic_ratio_table,
    log_asymptote,
    log_of_rational,
    ratio_trend,
    wp_volume,
)

__all__ = [
    "BesselConstants", "bessel_constants", "bessel_j0", "bessel_j1", "first_zero_j0",
    "RATIO_LIMITS", "VolumeRow", "wp_volume", "asymptotic_ratio_table", "log_asymptote", "log_of_rational", "ratio_trend",
]
