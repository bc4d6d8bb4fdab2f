import json
from collections.abc import Mapping
from fractions import Fraction
from typing import Any, Iterable, Iterator, Tuple


__all__ = (
    "canonical_key",
    "sorted_canonical",
    "SparseMap",
    "dump_json",
)


def canonical_key(value: Any):
    """Total order used for every output ordering (units, arrows, supports)."""
    sort_key = getattr(value, "sort_key", None)
    if callable(sort_key):
        return (3, sort_key())
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, (int, Fraction)):
        return (0, value)
    if isinstance(value, str):
        return (1, value)
    if isinstance(value, tuple):
        return (2, tuple(canonical_key(v) for v in value))
    if isinstance(value, (set, frozenset)):
        return (2, tuple(sorted(canonical_key(v) for v in value)))
    return (4, repr(value))


def sorted_canonical(values: Iterable[Any]) -> list:
    return sorted(values, key=canonical_key)


class SparseMap(Mapping):
    """
    Immutable finitely supported map with a canonical iteration order.

    Callers are responsible for never passing zero values; the ring layer
    prunes them before building a map.
    """

    __slots__ = ("_data", "_order", "_hash")

    def __init__(self, items: Iterable[Tuple[Any, Any]] = ()):
        data = dict(items.items() if isinstance(items, Mapping) else items)
        self._data = data
        self._order = tuple(sorted(data, key=canonical_key))
        self._hash = None

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self) -> Iterator:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __eq__(self, other):
        if isinstance(other, SparseMap):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def sort_key(self):
        return tuple((canonical_key(k), canonical_key(self._data[k])) for k in self._order)

    def __repr__(self):
        inner = ", ".join(f"{k!r}: {self._data[k]!r}" for k in self._order)
        return f"SparseMap({{{inner}}})"


def dump_json(document: Any) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
