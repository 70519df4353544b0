"""Reading JSON requests from files, stdin or inline strings."""

import json
import sys
from pathlib import Path

from .core.field import QQ, field_from_json
from .core.laurent import AuxLaurent
from .core.poly import PolyRing, parse_expr, poly_from_json
from .errors import ParseError
from .monomial import ideal_from_json
from .pencil import pencil_from_json
from .valuation import valuation_from_json


def load_json(source):
    """Decode ``source``: inline JSON, a file path, or ``-`` for stdin."""
    if source is None:
        raise ParseError("input", "required")
    text = source.strip()
    if source == "-":
        text = sys.stdin.read()
    elif not text.startswith(("{", "[")):
        path = Path(source)
        if not path.is_file():
            raise ParseError("input", f"no such file: {source}")
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError:
            raise ParseError("input", "file is not valid UTF-8") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("input", f"invalid JSON: {exc.msg} at line {exc.lineno}") from None


def require(obj, key, kind=None):
    if not isinstance(obj, dict):
        raise ParseError(key, "expected an enclosing object")
    if key not in obj:
        raise ParseError(key, "required")
    value = obj[key]
    if kind is not None and not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ParseError(key, f"expected {getattr(kind, '__name__', kind)}")
    return value


def optional_int(obj, key, default, minimum=0):
    if key not in obj:
        return default
    value = obj[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(key, f"expected an integer >= {minimum}")
    return value


def int_list(obj, key, minimum=0):
    value = require(obj, key, list)
    if not all(isinstance(v, int) and not isinstance(v, bool) and v >= minimum for v in value):
        raise ParseError(key, f"expected a list of integers >= {minimum}")
    return value


def read_ideal(obj):
    """A monomial ideal given bare or under ``"ideal"``."""
    if isinstance(obj, dict) and "ideal" in obj:
        obj = obj["ideal"]
    return ideal_from_json(obj)


def read_poly(raw, ring, key="poly"):
    """A polynomial as an expression string or a literal, defaulting to ``ring``."""
    if isinstance(raw, str):
        return parse_expr(raw, ring)
    if isinstance(raw, dict):
        p = poly_from_json(raw, ring)
        if p.ring != ring:
            raise ParseError(key, "variables or field differ from the surrounding ring")
        return p
    raise ParseError(key, "expected an expression string or a polynomial object")


def read_components(raw, ring, key="components"):
    """``{"n": poly}`` mapping of a Laurent sum."""
    if not isinstance(raw, dict) or not raw:
        raise ParseError(key, "expected a nonempty object of degree -> polynomial")
    out = {}
    for n, f in raw.items():
        try:
            deg = int(n)
        except ValueError:
            raise ParseError(key, f"degree {n!r} is not an integer") from None
        out[deg] = read_poly(f, ring, key)
    return out


def read_ring(obj, default_vars=None):
    names = obj.get("vars", default_vars)
    if names is None:
        raise ParseError("vars", "required")
    if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
        raise ParseError("vars", "must be a nonempty list of names")
    field = field_from_json(obj["field"]) if "field" in obj else QQ
    return PolyRing(field, names)


def read_laurent(obj, ring):
    return AuxLaurent(ring, read_components(require(obj, "components", dict), ring))


def read_valuation(raw, field=QQ):
    return valuation_from_json(raw, field)


def read_valuations(obj, key="U", field=QQ):
    raw = require(obj, key, list)
    if not raw:
        raise ParseError(key, "must be nonempty")
    out = []
    for item in raw:
        if isinstance(item, list):
            item = {"type": "monomial", "w": item}
        out.append(_as_plane_valuation(read_valuation(item, field)))
    return out


def _as_plane_valuation(V):
    """Monomial plane valuations become their staircase chains."""
    from .valuation import MonomialValuation, staircase

    if isinstance(V, MonomialValuation):
        if V.dim != 2:
            raise ParseError("w", "plane valuations need two weights")
        return staircase(V.weights)
    return V


def read_pencil(obj):
    if isinstance(obj, dict) and "pencil" in obj:
        obj = obj["pencil"]
    return pencil_from_json(obj)
