"""
Size-capped memo tables for per-system caches.
"""

from collections import OrderedDict
from typing import Any, Hashable, Optional


class BoundedCache(OrderedDict):
    """
    Dict that evicts its least recently used entry past ``maxsize``.

    Lookups through ``get`` and ``[]`` refresh an entry.
    """

    def __init__(self, maxsize: int):
        if maxsize < 1:
            raise ValueError(f"maxsize must be positive, got {maxsize}")
        super().__init__()
        self.maxsize = maxsize

    def __getitem__(self, key: Hashable) -> Any:
        value = super().__getitem__(key)
        self.move_to_end(key)
        return value

    def get(self, key: Hashable, default: Optional[Any] = None) -> Any:
        if key in self:
            return self[key]
        return default

    def __setitem__(self, key: Hashable, value: Any) -> None:
        super().__setitem__(key, value)
        self.move_to_end(key)
        while len(self) > self.maxsize:
            self.popitem(last=False)
