"""J0 and J1 from their power series, and the first zero of J0."""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

logger = logging.getLogger(__name__)

SERIES_CUTOFF = 1e-20
BRACKET = (2.0, 3.0)


def _bessel_series(order: int, x: float) -> float:
    """sum_k (-1)^k (x/2)^(2k+order) / (k! (k+order)!), summed until terms drop below the cutoff."""
    half = x / 2.0
    term = half ** order / math.factorial(order)
    total = term
    k = 0
    while abs(term) >= SERIES_CUTOFF or k < 2:
        k += 1
        term *= -(half * half) / (k * (k + order))
        total += term
    return total


def bessel_j0(x: float) -> float:
    return _bessel_series(0, x)


def bessel_j1(x: float) -> float:
    return _bessel_series(1, x)


@dataclass(frozen=True)
class BesselConstants:
    gamma0: float
    C: float

    def to_dict(self) -> dict:
        return {"gamma0": self.gamma0, "C": self.C}


def first_zero_j0(bisection_steps: int = 30, newton_steps: int = 20, tolerance: float = 1e-15) -> float:
    """Smallest positive zero of J0: bisection on [2, 3] to seed Newton (J0' = -J1)."""
    lo, hi = BRACKET
    if bessel_j0(lo) * bessel_j0(hi) > 0:
        raise ArithmeticError("J0 does not change sign on the seed bracket")
    for _ in range(bisection_steps):
        mid = (lo + hi) / 2.0
        if bessel_j0(lo) * bessel_j0(mid) <= 0:
            hi = mid
        else:
            lo = mid
    x = (lo + hi) / 2.0
    for step in range(newton_steps):
        delta = bessel_j0(x) / -bessel_j1(x)
        x -= delta
        if abs(delta) < tolerance:
            logger.debug("newton converged after %d steps", step + 1)
            break
    return x


@lru_cache(maxsize=1)
def bessel_constants() -> BesselConstants:
    """gamma0 and C = -2 gamma0 J0'(gamma0) = 2 gamma0 J1(gamma0)."""
    gamma0 = first_zero_j0()
    return BesselConstants(gamma0=gamma0, C=2.0 * gamma0 * bessel_j1(gamma0))
