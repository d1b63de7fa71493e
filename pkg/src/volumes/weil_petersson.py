"""Weil-Petersson volumes w_{g,n} = <tau_0^n kappa_1^(3g-3+n)>_g and their growth.

Volumes are exact rationals. The comparison with the large-n asymptotics
runs in log space: w_{1,50} does not fit in a double.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from evaluator.brackets import EvalRoute, bracket
from evaluator.keys import IntersectionKey, check_genus, is_stable
from indexing.errors import InvalidIndexError, UnstableError
from indexing.multiindex import Kind, MultiIndex
from indexing.rationals import format_rational
from volumes.bessel import bessel_constants

logger = logging.getLogger(__name__)

MANTISSA_BITS = 64
TREND_CHECKPOINTS = (30, 35, 40, 45, 50)

# value the ratio w / asymptote tends to; the genus 0 prefactor is off by a factor pi
RATIO_LIMITS = {0: math.pi, 1: 1.0}


@dataclass(frozen=True)
class VolumeRow:
    n: int
    w: Fraction
    asymptote: float | None
    ratio: float | None

    def to_dict(self) -> dict:
        return {"n": self.n, "w": format_rational(self.w), "asymptote": self.asymptote, "ratio": self.ratio}


def wp_volume(g: int, n: int, route: EvalRoute = EvalRoute.SPLITTING) -> Fraction:
    """w_{g,n}; the splitting recursion keeps every sub-key inside the tau_0 / kappa_1 family."""
    check_genus(g)
    if n < 0 or not is_stable(g, n):
        raise UnstableError(IntersectionKey.stability_message(g, max(n, 0)))
    return bracket(g, MultiIndex.delta(Kind.S0, 0, n), MultiIndex.delta(Kind.S1, 1, 3 * g - 3 + n), route)


def first_stable_n(g: int) -> int:
    return 3 if g == 0 else 1


def _log_int(value: int) -> float:
    """ln of a positive integer from its bit length and a 64-bit leading mantissa."""
    shift = max(value.bit_length() - MANTISSA_BITS, 0)
    return math.log(value >> shift) + shift * math.log(2)


def log_of_rational(value: Fraction) -> float:
    if value <= 0:
        raise InvalidIndexError(f"log of a non-positive rational {format_rational(value)}")
    return _log_int(value.numerator) - _log_int(value.denominator)


def log_asymptote(g: int, n: int) -> float | None:
    """ln of the predicted w_{g,n}; None where the formula is undefined (genus 0 with n = 3)."""
    constants = bessel_constants()
    ln_c = math.log(constants.C)
    if g == 1:
        return math.log(math.pi / 24) + 2 * n * math.log(2 * n) - n * ln_c - 2 * n
    k = n - 3
    if k < 1:
        return None
    prefactor = constants.gamma0 * 2 ** 1.5 / (constants.C * math.sqrt(math.pi))
    return math.log(prefactor) + 2 * k * math.log(2) + (2 * k + 0.5) * math.log(k) - k * ln_c - 2 * k


def asymptotic_ratio_table(g: int, n_max: int) -> list[VolumeRow]:
    """Exact volumes for every stable n <= n_max next to the asymptote and their ratio."""
    check_genus(g)
    start = first_stable_n(g)
    if n_max < start:
        raise UnstableError(f"no stable n <= {n_max} in genus {g}")
    rows = []
    for n in range(start, n_max + 1):
        w = wp_volume(g, n)
        ln_asymptote = log_asymptote(g, n)
        if ln_asymptote is None:
            rows.append(VolumeRow(n, w, None, None))
            continue
        ratio = math.exp(log_of_rational(w) - ln_asymptote)
        asymptote = math.exp(ln_asymptote) if ln_asymptote < 700 else math.inf
        rows.append(VolumeRow(n, w, asymptote, ratio))
    logger.info("filled genus %d volume table up to n = %d", g, n_max)
    return rows


def ratio_trend(rows: list[VolumeRow], limit: float = 1.0,
                checkpoints: tuple[int, ...] = TREND_CHECKPOINTS) -> dict:
    """|ratio / limit - 1| at the checkpoints present in ``rows`` and whether it strictly decreases."""
    by_n = {row.n: row for row in rows if row.ratio is not None}
    gaps = [(n, abs(by_n[n].ratio / limit - 1)) for n in checkpoints if n in by_n]
    decreasing = all(later < earlier for (_, earlier), (_, later) in zip(gaps, gaps[1:]))
    return {
        "limit": limit,
        "gaps": [{"n": n, "gap": gap} for n, gap in gaps],
        "decreasing": decreasing and len(gaps) > 1,
    }
