"""Sparse multi-indices over nonnegative integer positions.

A MultiIndex models either m in S0 (tau exponents, positions >= 0) or
p in S1 (kappa exponents, positions >= 1). Entries are stored as a sorted
tuple of (position, multiplicity) pairs with no zero multiplicity, so two
indices are equal exactly when their canonical maps are equal and every
index can key a memo table.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple

from indexing.errors import InvalidIndexError
from indexing.rationals import ExactRational, binomial, factorial


class Kind(str, Enum):
    """Which sequence space the index lives in."""
    S0 = "S0"
    S1 = "S1"


class WeightStats(NamedTuple):
    weighted_degree: int  # |m| = sum i * m_i
    total_count: int  # ||m|| = sum m_i
    factorial_product: ExactRational  # m! = prod m_i!


@dataclass(frozen=True)
class MultiIndex:
    """Canonical sparse exponent vector."""
    kind: Kind
    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = -1
        for position, multiplicity in self.entries:
            if position <= last:
                raise InvalidIndexError(f"entries not strictly sorted: {self.entries}")
            if multiplicity <= 0:
                raise InvalidIndexError(f"non-positive multiplicity at position {position}")
            if self.kind is Kind.S1 and position == 0:
                raise InvalidIndexError("kappa indices start at 1 (kappa_0 is a scalar)")
            last = position

    @classmethod
    def from_mapping(cls, kind: Kind, mapping: Mapping[int, int]) -> "MultiIndex":
        """Build from any position -> multiplicity map, dropping zeros."""
        for position, multiplicity in mapping.items():
            if position < 0 or multiplicity < 0:
                raise InvalidIndexError(f"negative entry {position}:{multiplicity}")
        entries = tuple(sorted((i, k) for i, k in mapping.items() if k))
        return cls(kind, entries)

    @classmethod
    def zero(cls, kind: Kind) -> "MultiIndex":
        return cls(kind, ())

    @classmethod
    def delta(cls, kind: Kind, position: int, multiplicity: int = 1) -> "MultiIndex":
        """multiplicity * delta_position."""
        return cls.from_mapping(kind, {position: multiplicity})

    @classmethod
    def from_points(cls, kind: Kind, positions: list[int]) -> "MultiIndex":
        """Count repeated positions: [0, 0, 1] -> m0=2, m1=1."""
        counts: dict[int, int] = {}
        for position in positions:
            counts[position] = counts.get(position, 0) + 1
        return cls.from_mapping(kind, counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def get(self, position: int) -> int:
        for i, k in self.entries:
            if i == position:
                return k
        return 0

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def weighted_degree(self) -> int:
        return sum(i * k for i, k in self.entries)

    @property
    def total_count(self) -> int:
        return sum(k for _, k in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def points(self) -> list[int]:
        """Expand to the sorted list of positions with repetition."""
        return [i for i, k in self.entries for _ in range(k)]

    def _check_kind(self, other: "MultiIndex"):
        if self.kind is not other.kind:
            raise InvalidIndexError(f"kind mismatch: {self.kind.value} vs {other.kind.value}")

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        self._check_kind(other)
        merged = self.as_dict()
        for i, k in other.entries:
            merged[i] = merged.get(i, 0) + k
        return MultiIndex.from_mapping(self.kind, merged)

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        self._check_kind(other)
        merged = self.as_dict()
        for i, k in other.entries:
            remaining = merged.get(i, 0) - k
            if remaining < 0:
                raise InvalidIndexError(f"cannot subtract {other} from {self}")
            merged[i] = remaining
        return MultiIndex.from_mapping(self.kind, merged)

    def plus(self, position: int, multiplicity: int = 1) -> "MultiIndex":
        return self + MultiIndex.delta(self.kind, position, multiplicity)

    def minus(self, position: int, multiplicity: int = 1) -> "MultiIndex":
        return self - MultiIndex.delta(self.kind, position, multiplicity)

    def to_text(self) -> str:
        """Inverse of parse_index_spec: `0:3,1:1`."""
        return ",".join(f"{i}:{k}" for i, k in self.entries)

    def __str__(self) -> str:
        letter = "tau" if self.kind is Kind.S0 else "kappa"
        if not self.entries:
            return "1"
        return " ".join(f"{letter}_{i}^{k}" if k > 1 else f"{letter}_{i}" for i, k in self.entries)


def weight_stats(m: MultiIndex) -> WeightStats:
    """|m|, ||m|| and m! in one pass."""
    fact = 1
    for _, k in m.entries:
        fact *= factorial(k)
    return WeightStats(m.weighted_degree, m.total_count, ExactRational(fact))


def multi_binomial(m: MultiIndex, l: MultiIndex) -> ExactRational:
    """prod_i C(m_i, l_i); zero unless l <= m."""
    if m.kind is not l.kind:
        raise InvalidIndexError(f"kind mismatch: {m.kind.value} vs {l.kind.value}")
    value = 1
    for i, k in l.entries:
        value *= binomial(m.get(i), k)
        if not value:
            break
    return ExactRational(value)


def split_enumerate(m: MultiIndex) -> Iterator[tuple[MultiIndex, MultiIndex, ExactRational]]:
    """All ordered splittings m = m' + m'' with coefficient C(m, m').

    Lazy odometer over the per-position splits, lexicographic in m'.
    Yields prod_i (m_i + 1) triples.
    """
    positions = m.positions
    multiplicities = [k for _, k in m.entries]
    for choice in product(*(range(k + 1) for k in multiplicities)):
        coefficient = 1
        first: list[tuple[int, int]] = []
        second: list[tuple[int, int]] = []
        for position, k, j in zip(positions, multiplicities, choice):
            coefficient *= binomial(k, j)
            if j:
                first.append((position, j))
            if k - j:
                second.append((position, k - j))
        yield MultiIndex(m.kind, tuple(first)), MultiIndex(m.kind, tuple(second)), ExactRational(coefficient)


def parse_index_spec(text: str | None, kind: Kind) -> MultiIndex:
    """Parse the CLI syntax `0:3,1:1` (m0=3, m1=1); empty means zero."""
    if text is None or not text.strip():
        return MultiIndex.zero(kind)
    counts: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        position_text, sep, multiplicity_text = chunk.partition(":")
        if not sep:
            multiplicity_text = "1"
        try:
            position = int(position_text)
            multiplicity = int(multiplicity_text)
        except ValueError as e:
            raise InvalidIndexError(f"bad index entry {chunk!r}, expected index:multiplicity") from e
        if position < 0 or multiplicity < 0:
            raise InvalidIndexError(f"negative entry {chunk!r}")
        counts[position] = counts.get(position, 0) + multiplicity
    return MultiIndex.from_mapping(kind, counts)


def indices_of_weight(kind: Kind, weight: int, positions: Iterable[int]) -> Iterator[MultiIndex]:
    """Every index supported on ``positions`` (all >= 1) with |m| = weight."""
    positions = tuple(sorted(set(positions)))
    if positions and positions[0] < 1:
        raise InvalidIndexError("position 0 has weight 0, so its multiplicity is unbounded")

    def walk(remaining: int, start: int) -> Iterator[dict[int, int]]:
        if remaining == 0:
            yield {}
            return
        for j in range(start, len(positions)):
            head = positions[j]
            for k in range(1, remaining // head + 1):
                for rest in walk(remaining - k * head, j + 1):
                    yield {head: k, **rest}

    if weight < 0:
        return
    for mapping in walk(weight, 0):
        yield MultiIndex.from_mapping(kind, mapping)
