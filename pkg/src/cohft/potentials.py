"""Rank one restricted CohFT potentials in genus 0 and 1.

A point (s, u) gives Phi_0 = H_0(x, 0; s) and
Phi_1 = (u/24) Phi_0'' + (1/24) log Phi_0''', both assembled here
coefficient by coefficient from kappa and lambda_1 brackets.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from evaluator.brackets import bracket, lambda_bracket
from indexing.errors import InvalidIndexError, SeriesError
from indexing.multiindex import Kind, MultiIndex, indices_of_weight
from indexing.rationals import ZERO, factorial, format_rational, parse_rational
from series.identities import IdentityReport, compare_series
from series.truncated import TruncatedSeries, series_log, series_partial

logger = logging.getLogger(__name__)

X = ("x",)
ONE_24 = Fraction(1, 24)


@dataclass(frozen=True)
class CohftPoint:
    """Coordinates (s, u); s is stored as sorted (index, value) pairs with no zero values."""
    s: tuple[tuple[int, Fraction], ...] = ()
    u: Fraction = ZERO

    def __post_init__(self):
        for index, value in self.s:
            if index < 1:
                raise InvalidIndexError(f"s coordinates start at index 1, got {index}")
            if not value:
                raise InvalidIndexError(f"s_{index} = 0 must be left out")
        if list(self.s) != sorted(self.s):
            raise InvalidIndexError("s coordinates must be sorted by index")

    @classmethod
    def from_mapping(cls, s: Mapping[int, Fraction | int] | None = None, u: Fraction | int = 0) -> "CohftPoint":
        s = s or {}
        return cls(tuple(sorted((i, Fraction(v)) for i, v in s.items() if v)), Fraction(u))

    @classmethod
    def unit(cls) -> "CohftPoint":
        return cls()

    @property
    def s_map(self) -> dict[int, Fraction]:
        return dict(self.s)

    def to_dict(self) -> dict:
        return {"s": {str(i): format_rational(v) for i, v in self.s}, "u": format_rational(self.u)}


def parse_point(s_text: str | None, u_text: str | None = None) -> CohftPoint:
    """Parse ``"1=1/2,2=0"`` and ``"1/3"`` into a point."""
    values: dict[int, Fraction] = {}
    for chunk in (s_text or "").split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        index_text, sep, value_text = chunk.partition("=")
        if not sep:
            raise InvalidIndexError(f"expected index=value, got {chunk!r}")
        try:
            index = int(index_text)
        except ValueError:
            raise InvalidIndexError(f"bad s index {index_text!r}") from None
        if index in values:
            raise InvalidIndexError(f"s_{index} given twice")
        values[index] = parse_rational(value_text.strip())
    u = parse_rational(u_text) if u_text else ZERO
    return CohftPoint.from_mapping(values, u)


def tensor(a: CohftPoint, b: CohftPoint) -> CohftPoint:
    """Tensor product of theories: coordinates add."""
    s = a.s_map
    for index, value in b.s:
        s[index] = s.get(index, ZERO) + value
    return CohftPoint.from_mapping(s, a.u + b.u)


@dataclass(frozen=True)
class PotentialPair:
    phi0: TruncatedSeries
    phi1: TruncatedSeries
    order: int

    def coefficient(self, g: int, n: int) -> Fraction:
        """I_{g,n} = n! [x^n] Phi_g."""
        series = self.phi0 if g == 0 else self.phi1
        return series.coefficient((n,)) * factorial(n)

    def to_dict(self) -> dict:
        return {"order": self.order, "phi0": self.phi0.to_json(), "phi1": self.phi1.to_json()}


def _s_weight(point: CohftPoint, p: MultiIndex) -> Fraction:
    """s^p / p!."""
    s = point.s_map
    value = Fraction(1)
    for index, k in p.entries:
        value *= s[index] ** k / factorial(k)
    return value


def _weighted_sum(point: CohftPoint, weight: int, term) -> Fraction:
    positions = tuple(i for i, _ in point.s if i <= weight)
    total = ZERO
    for p in indices_of_weight(Kind.S1, weight, positions):
        value = term(p)
        if value:
            total += _s_weight(point, p) * value
    return total


def _tau0(n: int) -> MultiIndex:
    return MultiIndex.delta(Kind.S0, 0, n)


def _x_series(order: int, coefficients: Mapping[int, Fraction]) -> TruncatedSeries:
    return TruncatedSeries.from_terms(X, order, (((n,), c / factorial(n)) for n, c in coefficients.items()))


def potential_from_point(point: CohftPoint, order: int) -> PotentialPair:
    """Phi_0 and Phi_1 of the theory at ``point``, exact to x^order."""
    if order < 3:
        raise SeriesError(f"potential order must be >= 3, got {order}")
    genus0 = {
        n: _weighted_sum(point, n - 3, lambda p, n=n: bracket(0, _tau0(n), p))
        for n in range(3, order + 1)
    }
    genus1 = {}
    for n in range(1, order + 1):
        value = _weighted_sum(point, n, lambda p, n=n: bracket(1, _tau0(n), p))
        if point.u:
            value += point.u * _weighted_sum(point, n - 1, lambda p, n=n: lambda_bracket(p, 1, n, 1))
        genus1[n] = value
    logger.debug("potential at %s to order %d", point, order)
    return PotentialPair(_x_series(order, genus0), _x_series(order, genus1), order)


def _third_derivative(phi0: TruncatedSeries) -> TruncatedSeries:
    return series_partial(series_partial(series_partial(phi0, "x"), "x"), "x")


def check_getzler(pair: PotentialPair) -> TruncatedSeries:
    """-(P0''')^2 P1'' + P0''' P0'''' P1' - (1/12)(P0'''')^2 + (1/24) P0''' P0^(5), exact to order - 5."""
    if pair.order < 5:
        raise SeriesError(f"the Getzler check needs order >= 5, got {pair.order}")
    d3 = _third_derivative(pair.phi0)
    d4 = series_partial(d3, "x")
    d5 = series_partial(d4, "x")
    p1 = series_partial(pair.phi1, "x")
    p2 = series_partial(p1, "x")
    residual = -(d3 * d3 * p2) + d3 * d4 * p1 - (d4 * d4).scale(Fraction(1, 12)) + (d3 * d5).scale(ONE_24)
    return residual.truncate(pair.order - 5)


def _normalized_log(phi0: TruncatedSeries, i03: Fraction) -> TruncatedSeries:
    """log(Phi_0''' / I_{0,3}); the constant log I_{0,3} is dropped."""
    return series_log(_third_derivative(phi0).scale(1 / i03))


def genus_one_from_genus_zero(phi0: TruncatedSeries, I11: Fraction,
                              noninvertible_phi1: TruncatedSeries | None = None) -> PotentialPair:
    """Phi_1 = (1/24) log Phi_0''' + B Phi_0'' with B fixed by I_{1,1} = (1/24) I_{0,4}/I_{0,3} + B I_{0,3}.

    With I_{0,3} = 0 the theory is noninvertible: Phi_0 must vanish and
    Phi_1 is unconstrained, so ``noninvertible_phi1`` (or 0) is returned.
    Otherwise Phi_1 is exact to x^(order - 3).
    """
    order = phi0.max_degree
    i03 = phi0.coefficient((3,)) * 6
    if not i03:
        if not phi0.is_zero():
            raise SeriesError("a theory with I_{0,3} = 0 must have Phi_0 = 0")
        phi1 = noninvertible_phi1 if noninvertible_phi1 is not None else TruncatedSeries.zero(X, order)
        return PotentialPair(phi0, phi1, order)
    i04 = phi0.coefficient((4,)) * 24 if order >= 4 else ZERO
    b = (Fraction(I11) - ONE_24 * i04 / i03) / i03
    second = series_partial(series_partial(phi0, "x"), "x")
    phi1 = _normalized_log(phi0, i03).scale(ONE_24) + second.scale(b)
    return PotentialPair(phi0, phi1, order)


def check_b_form(point: CohftPoint, order: int) -> IdentityReport:
    """Phi_1 - (1/24) log(Phi_0''' / I_{0,3}) == (u/24) Phi_0''."""
    pair = potential_from_point(point, order)
    i03 = pair.coefficient(0, 3)
    lhs = pair.phi1 - _normalized_log(pair.phi0, i03).scale(ONE_24)
    rhs = series_partial(series_partial(pair.phi0, "x"), "x").scale(point.u * ONE_24)
    return compare_series("b-form", lhs, rhs)


def check_u_derivative(point: CohftPoint, delta: Fraction, order: int) -> IdentityReport:
    """Phi_0 does not move with u, and Phi_1 moves by (delta/24) Phi_0''."""
    before = potential_from_point(point, order)
    after = potential_from_point(CohftPoint(point.s, point.u + Fraction(delta)), order)
    shift = series_partial(series_partial(before.phi0, "x"), "x").scale(Fraction(delta) * ONE_24)
    report = compare_series("u-derivative", after.phi0, before.phi0, "phi0")
    return report.merge(compare_series("u-derivative", after.phi1 - before.phi1, shift, "phi1"))
