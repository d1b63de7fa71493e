"""Truncated multivariate power series over exact rationals.

Every variable has degree 1 and a series is exact up to its total degree
``max_degree``; nothing above it is stored. Binary operations on series of
different precision work to the smaller one, and differentiation lowers
the precision by one, so every stored coefficient is always exact.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from indexing.errors import SeriesError
from indexing.rationals import ZERO, format_rational, parse_rational

Exponents = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Sparse polynomial sum c_e * v^e with deg(e) <= max_degree and no zero c_e."""
    variables: tuple[str, ...]
    max_degree: int
    coefficients: Mapping[Exponents, Fraction] = field(default_factory=dict)

    @classmethod
    def from_terms(cls, variables: Iterable[str], max_degree: int,
                   terms: Iterable[tuple[Exponents, Fraction]]) -> "TruncatedSeries":
        variables = tuple(variables)
        if max_degree < 0:
            raise SeriesError(f"max_degree must be >= 0, got {max_degree}")
        coefficients: dict[Exponents, Fraction] = {}
        for exponents, value in terms:
            if len(exponents) != len(variables):
                raise SeriesError(f"exponent vector {exponents} does not match variables {variables}")
            if sum(exponents) > max_degree:
                continue
            coefficients[exponents] = coefficients.get(exponents, ZERO) + Fraction(value)
        return cls(variables, max_degree, {e: c for e, c in coefficients.items() if c})

    @classmethod
    def zero(cls, variables: Iterable[str], max_degree: int) -> "TruncatedSeries":
        return cls.from_terms(variables, max_degree, ())

    @classmethod
    def constant(cls, variables: Iterable[str], max_degree: int, value: Fraction | int) -> "TruncatedSeries":
        variables = tuple(variables)
        return cls.from_terms(variables, max_degree, [((0,) * len(variables), Fraction(value))])

    @classmethod
    def monomial(cls, variables: Iterable[str], max_degree: int, powers: Mapping[str, int],
                 value: Fraction | int = 1) -> "TruncatedSeries":
        variables = tuple(variables)
        unknown = set(powers) - set(variables)
        if unknown:
            raise SeriesError(f"unknown variables {sorted(unknown)}")
        exponents = tuple(powers.get(v, 0) for v in variables)
        return cls.from_terms(variables, max_degree, [(exponents, Fraction(value))])

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.coefficients.items())

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variables == other.variables and self.max_degree == other.max_degree
                and dict(self.coefficients) == dict(other.coefficients))

    def index_of(self, variable: str) -> int:
        try:
            return self.variables.index(variable)
        except ValueError:
            raise SeriesError(f"variable {variable!r} not in {self.variables}") from None

    def exponents_for(self, powers: Mapping[str, int]) -> Exponents:
        for name in powers:
            self.index_of(name)
        return tuple(powers.get(v, 0) for v in self.variables)

    def coefficient(self, powers: Mapping[str, int] | Exponents) -> Fraction:
        """Coefficient of a monomial given as {name: power} or an exponent tuple."""
        exponents = tuple(powers) if not isinstance(powers, Mapping) else self.exponents_for(powers)
        if sum(exponents) > self.max_degree:
            raise SeriesError(f"monomial {exponents} lies above the precision {self.max_degree}")
        return self.coefficients.get(exponents, ZERO)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficients.get((0,) * len(self.variables), ZERO)

    def is_zero(self) -> bool:
        return not self.coefficients

    def truncate(self, max_degree: int) -> "TruncatedSeries":
        return TruncatedSeries.from_terms(self.variables, min(max_degree, self.max_degree), self)

    def _compatible(self, other: "TruncatedSeries") -> int:
        if self.variables != other.variables:
            raise SeriesError(f"variable mismatch: {self.variables} vs {other.variables}")
        return min(self.max_degree, other.max_degree)

    def __add__(self, other: "TruncatedSeries | Fraction | int") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(self.variables, self.max_degree, other)
        degree = self._compatible(other)
        return TruncatedSeries.from_terms(self.variables, degree, [*self, *other])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __sub__(self, other: "TruncatedSeries | Fraction | int") -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Fraction | int) -> "TruncatedSeries":
        return (-self) + other

    def scale(self, factor: Fraction | int) -> "TruncatedSeries":
        factor = Fraction(factor)
        return TruncatedSeries.from_terms(self.variables, self.max_degree,
                                          ((e, c * factor) for e, c in self))

    def __mul__(self, other: "TruncatedSeries | Fraction | int") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def restrict(self, variables: Iterable[str]) -> "TruncatedSeries":
        """Set every variable outside ``variables`` to zero and drop it."""
        variables = tuple(variables)
        keep = [self.index_of(v) for v in variables]
        dropped = [i for i in range(len(self.variables)) if i not in keep]
        terms = ((tuple(e[i] for i in keep), c) for e, c in self if not any(e[i] for i in dropped))
        return TruncatedSeries.from_terms(variables, self.max_degree, terms)

    def to_json(self) -> list[dict]:
        """Stable serialization, graded-lexicographic in the exponents."""
        ordered = sorted(self.coefficients.items(), key=lambda item: (sum(item[0]), item[0]))
        return [
            {
                "exponents": {v: k for v, k in zip(self.variables, e) if k},
                "coefficient": format_rational(c),
            }
            for e, c in ordered
        ]

    @classmethod
    def from_json(cls, variables: Iterable[str], max_degree: int, rows: list[dict]) -> "TruncatedSeries":
        variables = tuple(variables)
        return cls.from_terms(variables, max_degree, (
            (tuple(row["exponents"].get(v, 0) for v in variables), parse_rational(row["coefficient"]))
            for row in rows
        ))

    def __str__(self) -> str:
        if not self.coefficients:
            return f"0 + O({self.max_degree + 1})"
        parts = []
        for row in self.to_json():
            monomial = "*".join(f"{v}^{k}" if k > 1 else v for v, k in row["exponents"].items())
            parts.append(f"{row['coefficient']}*{monomial}" if monomial else row["coefficient"])
        return " + ".join(parts) + f" + O({self.max_degree + 1})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Product, truncated at the common precision."""
    degree = f._compatible(g)
    g_terms = [(e, sum(e), c) for e, c in g]
    product: dict[Exponents, Fraction] = {}
    for e1, c1 in f:
        d1 = sum(e1)
        if d1 > degree:
            continue
        for e2, d2, c2 in g_terms:
            if d1 + d2 > degree:
                continue
            e = tuple(a + b for a, b in zip(e1, e2))
            product[e] = product.get(e, ZERO) + c1 * c2
    return TruncatedSeries.from_terms(f.variables, degree, product.items())


def series_partial(f: TruncatedSeries, variable: str) -> TruncatedSeries:
    """d f / d variable; the result is exact to one degree less."""
    i = f.index_of(variable)
    if f.max_degree == 0:
        raise SeriesError("cannot differentiate a series known only to degree 0")
    terms = []
    for e, c in f:
        if e[i]:
            lowered = e[:i] + (e[i] - 1,) + e[i + 1:]
            terms.append((lowered, c * e[i]))
    return TruncatedSeries.from_terms(f.variables, f.max_degree - 1, terms)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """exp(f) for f without constant term."""
    if f.constant_term:
        raise SeriesError(f"exp needs constant term 0, got {format_rational(f.constant_term)}")
    result = TruncatedSeries.constant(f.variables, f.max_degree, 1)
    term = result
    for k in range(1, f.max_degree + 1):
        term = series_mul(term, f).scale(Fraction(1, k))
        if term.is_zero():
            break
        result = result + term
    return result


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """log(f) for f with constant term 1, by the Mercator series in f - 1."""
    if f.constant_term != 1:
        raise SeriesError(f"log needs constant term 1, got {format_rational(f.constant_term)}")
    g = f - 1
    result = TruncatedSeries.zero(f.variables, f.max_degree)
    power = TruncatedSeries.constant(f.variables, f.max_degree, 1)
    for k in range(1, f.max_degree + 1):
        power = series_mul(power, g)
        if power.is_zero():
            break
        sign = 1 if k % 2 else -1
        result = result + power.scale(Fraction(sign, k))
    return result
