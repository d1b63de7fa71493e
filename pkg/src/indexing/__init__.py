"""Multi-index arithmetic, exact rationals and combinatorial primitives."""

from .errors import InvalidIndexError, ModuliError, SeriesError, UnstableError, UnsupportedGenusError
from .multiindex import (
    Kind,
    MultiIndex,
    WeightStats,
    indices_of_weight,
    multi_binomial,
    parse_index_spec,
    split_enumerate,
    weight_stats,
)
from .rationals import ExactRational, format_rational, multinomial, parse_rational

__all__ = [
    "ModuliError", "UnsupportedGenusError", "UnstableError", "InvalidIndexError", "SeriesError",
    "Kind", "MultiIndex", "WeightStats", "weight_stats", "multi_binomial", "split_enumerate", "parse_index_spec",
    "indices_of_weight",
    "ExactRational", "format_rational", "parse_rational", "multinomial",
]
