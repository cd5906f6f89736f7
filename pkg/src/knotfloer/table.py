"""Built-in knot table: PD codes keyed by Rolfsen-style names.

The JSON data file is regenerated by scripts/build_table.py; the
FLOER_TABLE_PATH environment variable overrides its location.
"""

from __future__ import annotations

import json
import os
from functools import lru_cache

from .diagrams import KnotDiagram

_DATA = os.path.join(os.path.dirname(__file__), "data", "knot_table.json")


def table_path():
    return os.environ.get("FLOER_TABLE_PATH", _DATA)


@lru_cache(maxsize=None)
def _load(path):
    with open(path) as f:
        return json.load(f)


def raw_table():
    return _load(table_path())


def names():
    return sorted(raw_table(), key=_name_key)


def _name_key(name):
    head, _, tail = name.partition("_")
    try:
        return (int(head), int(tail))
    except ValueError:
        return (10**9, 0)


def lookup(name):
    entry = raw_table().get(name)
    if entry is None:
        raise KeyError("knot %r is not in the table" % name)
    return KnotDiagram.from_tuples(entry["pd"], name)


def entry(name):
    e = raw_table().get(name)
    if e is None:
        raise KeyError("knot %r is not in the table" % name)
    return e


def alternating_names(max_crossings=None):
    out = []
    for name in names():
        e = raw_table()[name]
        if not e["alternating"]:
            continue
        if max_crossings is not None and _name_key(name)[0] > max_crossings:
            continue
        out.append(name)
    return out
