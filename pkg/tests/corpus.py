"""The acceptance corpus, shared across test modules with session-level caching."""
from __future__ import annotations

from functools import lru_cache

from gvzkit.chartable import character_table
from gvzkit.cli import build_group_from_spec, parse_group_spec
from gvzkit.vanishing import normal_lattice

CORPUS_SPECS = tuple(
    [f"cyclic:{n}" for n in range(1, 17)]
    + [f"dihedral:{n}" for n in (8, 10, 12, 14, 16)]
    + ["generalized_quaternion:8", "generalized_quaternion:16"]
    + ["symmetric:3", "symmetric:4", "alternating:4", "alternating:5"]
    + [
        "extraspecial:2:1:p",
        "extraspecial:2:1:p2",
        "extraspecial:3:1:p",
        "extraspecial:3:1:p2",
        "extraspecial:5:1:p",
        "extraspecial:5:1:p2",
        "extraspecial:3:2:p",
    ]
    + ["modular_16", "dihedral:8 x cyclic:3", "extraspecial:3:1:p x cyclic:4"]
)

SMALL_CORPUS_SPECS = tuple(
    s for s in CORPUS_SPECS if build_group_from_spec(parse_group_spec(s)).order <= 64
)


@lru_cache(maxsize=None)
def corpus_group(spec: str):
    return build_group_from_spec(parse_group_spec(spec))


@lru_cache(maxsize=None)
def corpus_table(spec: str):
    return character_table(corpus_group(spec))


@lru_cache(maxsize=None)
def corpus_lattice(spec: str):
    return normal_lattice(corpus_group(spec), corpus_table(spec))
