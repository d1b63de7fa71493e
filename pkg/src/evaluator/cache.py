"""Memo tables for bracket values."""

import logging
from typing import Generic, Hashable, TypeVar

from settings import get_settings

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


class MemoTable(Generic[K, V]):
    """Grow-only dict with a size ceiling.

    Only finished values are stored, so a concurrent reader sees either
    nothing or the final value. Past the ceiling values are still
    returned to the caller but no longer remembered.
    """

    def __init__(self, name: str):
        self.name = name
        self._values: dict[K, V] = {}
        self._full = False

    def get(self, key: K) -> V | None:
        return self._values.get(key)

    def store(self, key: K, value: V):
        limit = get_settings().cache_limit
        if limit and len(self._values) >= limit:
            if not self._full:
                logger.warning("memo table %s reached its limit of %d entries", self.name, limit)
                self._full = True
            return
        self._values[key] = value

    def clear(self):
        self._values.clear()
        self._full = False

    def __len__(self) -> int:
        return len(self._values)
