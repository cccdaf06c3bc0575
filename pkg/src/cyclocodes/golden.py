"""Reference data: published factor lists, weight tables and defining sets."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

__all__ = ["load", "triple_key"]


@lru_cache(maxsize=None)
def load(name: str) -> dict:
    """One of: factors, census_tables, family_tables, class_polynomials,
    bch_defining_sets."""
    text = resources.files(__package__).joinpath("golden", f"{name}.json").read_text()
    return json.loads(text)


def triple_key(triple) -> str:
    return "".join(str(t) for t in triple)
