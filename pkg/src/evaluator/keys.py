"""Validated bracket keys <tau^m kappa^p>_g."""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterator

from indexing.errors import InvalidIndexError, UnstableError, UnsupportedGenusError
from indexing.multiindex import Kind, MultiIndex, indices_of_weight

SUPPORTED_GENERA = (0, 1)


class KeyOutcome(str, Enum):
    """Non-key results of make_key."""
    ZERO = "zero"  # dimension equation fails, the bracket is 0 by convention
    INVALID = "invalid"  # M_{g,n} is unstable


def check_genus(g: int):
    if g not in SUPPORTED_GENERA:
        raise UnsupportedGenusError(f"genus {g} is not supported (only 0 and 1)")


def is_stable(g: int, n: int) -> bool:
    return 2 * g - 2 + n > 0


def dimension_matches(g: int, m: MultiIndex, p: MultiIndex) -> bool:
    """3g - 3 + ||m|| == |m| + |p|."""
    return 3 * g - 3 + m.total_count == m.weighted_degree + p.weighted_degree


@dataclass(frozen=True)
class IntersectionKey:
    """One bracket; n = ||m|| marked points."""
    genus: int
    m: MultiIndex
    p: MultiIndex

    def __post_init__(self):
        check_genus(self.genus)
        if self.m.kind is not Kind.S0 or self.p.kind is not Kind.S1:
            raise InvalidIndexError("a key needs tau exponents in S0 and kappa exponents in S1")
        if not is_stable(self.genus, self.m.total_count):
            raise UnstableError(self.stability_message(self.genus, self.m.total_count))
        if not dimension_matches(self.genus, self.m, self.p):
            raise InvalidIndexError(f"dimension mismatch for {self}")

    @property
    def n(self) -> int:
        return self.m.total_count

    @property
    def kappa0(self) -> int:
        """kappa_0 = 2g - 2 + n as a scalar."""
        return 2 * self.genus - 2 + self.n

    @property
    def is_pure_psi(self) -> bool:
        return self.p.is_zero()

    @staticmethod
    def stability_message(g: int, n: int) -> str:
        return f"M_{{{g},{n}}} is unstable: need 2g - 2 + n > 0, got {2 * g - 2 + n}"

    def __str__(self) -> str:
        inner = " ".join(part for part in (str(self.m), str(self.p)) if part != "1") or "1"
        return f"<{inner}>_{self.genus}"


def make_key(g: int, m: MultiIndex, p: MultiIndex) -> IntersectionKey | KeyOutcome:
    """Validate (g, m, p): a key, KeyOutcome.ZERO or KeyOutcome.INVALID.

    Stability is checked before the dimension equation, so <tau_0^2>_0 is
    INVALID rather than ZERO.
    """
    check_genus(g)
    if m.kind is not Kind.S0 or p.kind is not Kind.S1:
        raise InvalidIndexError("tau exponents must be S0 and kappa exponents S1")
    if not is_stable(g, m.total_count):
        return KeyOutcome.INVALID
    if not dimension_matches(g, m, p):
        return KeyOutcome.ZERO
    return IntersectionKey(g, m, p)


def require_key(g: int, m: MultiIndex, p: MultiIndex) -> IntersectionKey | None:
    """make_key, raising on instability and mapping ZERO to None."""
    outcome = make_key(g, m, p)
    if outcome is KeyOutcome.INVALID:
        raise UnstableError(IntersectionKey.stability_message(g, m.total_count))
    if outcome is KeyOutcome.ZERO:
        return None
    return outcome


def lenient_key(g: int, m: MultiIndex, p: MultiIndex) -> IntersectionKey | None:
    """Key for a recursion sub-term, None when it vanishes (unstable or off-dimension)."""
    if not is_stable(g, m.total_count) or not dimension_matches(g, m, p):
        return None
    return IntersectionKey(g, m, p)


def enumerate_keys(g: int, n_max: int, dim_max: int) -> Iterator[IntersectionKey]:
    """Every valid key of genus g with ||m|| <= n_max and |m| + |p| <= dim_max."""
    check_genus(g)
    for n in range(1, n_max + 1):
        dim = 3 * g - 3 + n
        if not is_stable(g, n) or dim < 0 or dim > dim_max:
            continue
        for psi in combinations_with_replacement(range(dim + 1), n):
            rest = dim - sum(psi)
            if rest < 0:
                continue
            m = MultiIndex.from_points(Kind.S0, list(psi))
            for p in indices_of_weight(Kind.S1, rest, range(1, rest + 1)):
                yield IntersectionKey(g, m, p)
