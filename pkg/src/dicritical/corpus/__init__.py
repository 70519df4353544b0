"""Bundled example inputs: normal and equigenerated monomial ideals, plane pencils."""

import json
from functools import lru_cache
from importlib import resources

from ..monomial import ideal_from_json
from ..pencil import pencil_from_json


@lru_cache(maxsize=None)
def _load(name):
    return json.loads(resources.files(__name__).joinpath(name).read_text(encoding="utf-8"))


def normal_ideals():
    return [ideal_from_json(obj) for obj in _load("monomial_ideals.json")["ideals"]]


def equigenerated_ideals():
    return [ideal_from_json(obj) for obj in _load("equigenerated.json")["ideals"]]


def all_ideals():
    seen, out = set(), []
    for I in normal_ideals() + equigenerated_ideals():
        if I not in seen:
            seen.add(I)
            out.append(I)
    return out


def pencils():
    """``(pencil, oracle_applies)`` pairs."""
    return [(pencil_from_json(obj), obj.get("initial_form_oracle", False)) for obj in _load("pencils.json")["pencils"]]
