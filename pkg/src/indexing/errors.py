"""Exceptions raised by the library."""


class ModuliError(ValueError):
    """Base class for all input and domain errors."""


class UnsupportedGenusError(ModuliError):
    """Only genus 0 and genus 1 are computed."""


class UnstableError(ModuliError):
    """The moduli space M_{g,n} is unstable (2g - 2 + n <= 0)."""


class InvalidIndexError(ModuliError):
    """Malformed multi-index, kind mismatch or bad text syntax."""


class SeriesError(ModuliError):
    """Incompatible series or a constant-term precondition violated."""
