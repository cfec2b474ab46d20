"""JSON helpers with round-trip-exact float formatting.

Floats are written with 17 significant digits, which is enough for any IEEE-754
double to parse back bit-identically. Integer-valued matrices are written as
plain integers.
"""
from __future__ import annotations

import json
from typing import Any


class _Float17(float):
    # json uses float.__repr__ for serialization; 17 significant digits
    # guarantee an exact double round trip.
    def __repr__(self) -> str:
        return format(float(self), ".17g")


def _tag(value: Any) -> Any:
    if isinstance(value, bool):
        return value
    if isinstance(value, float):
        if value.is_integer() and abs(value) < 2**53:
            return int(value)
        return _Float17(value)
    if isinstance(value, dict):
        return {k: _tag(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tag(v) for v in value]
    return value


def dump_json(obj: Any, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_tag(obj), fh, indent=1)
        fh.write("\n")


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
