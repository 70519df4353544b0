"""Discrete valuations on polynomial rings and their extensions to Y and Z.

Values are integers or :data:`INFINITY` (``math.inf``), which only the zero
element receives.
"""

import math
from functools import reduce

from .core.field import QQ, SimpleExtension
from .core.laurent import AuxLaurent
from .core.poly import PolyRing, parse_expr, substitute
from .errors import (
    BadParameters,
    DimensionMismatch,
    InvalidReesElement,
    NonRationalPoint,
    ParseError,
    ZeroElement,
)

INFINITY = math.inf


def value_to_json(v):
    return "inf" if v == INFINITY else int(v)


class MonomialValuation:
    """``f -> min <w, e>`` over the support of ``f``."""

    kind = "monomial"

    def __init__(self, weights):
        w = tuple(int(x) for x in weights)
        if not w or min(w) <= 0:
            raise BadParameters(f"weights must be positive integers, got {list(weights)}")
        if reduce(math.gcd, w) != 1:
            raise BadParameters(f"weights {list(w)} are not primitive")
        self.weights = w

    @property
    def dim(self):
        return len(self.weights)

    def __call__(self, f):
        return mono_value(self, f)

    def value(self, f):
        return mono_value(self, f)

    def monomial_value(self, e):
        return sum(a * b for a, b in zip(self.weights, e))

    def __eq__(self, other):
        return isinstance(other, MonomialValuation) and other.weights == self.weights

    def __hash__(self):
        return hash(("mono", self.weights))

    def __repr__(self):
        return f"MonomialValuation({list(self.weights)})"

    def to_json(self):
        return {"type": "monomial", "w": list(self.weights)}


def mono_value(v, f):
    if f.ring.nvars != v.dim:
        raise DimensionMismatch(f"{f.ring.nvars} variables vs {v.dim} weights")
    if f.is_zero:
        return INFINITY
    return min(v.monomial_value(e) for e in f.terms)


def ideal_value(V, gens):
    """Minimum of ``V`` over a generating set; ``INFINITY`` for the zero ideal."""
    return min((V(g) for g in gens), default=INFINITY)


def gauss_eval(v, F):
    """Value of ``sum a_i Y^i`` as the minimum of the coefficient values."""
    if isinstance(F, AuxLaurent):
        F = F.components.values()
    elif isinstance(F, dict):
        F = F.values()
    return min((v(a) for a in F), default=INFINITY)


class ReesElement(AuxLaurent):
    """``sum_{n >= 0} f_n Z^n``; ``ideal`` (optional) checks ``f_n`` in ``I^n``."""

    __slots__ = ("ideal",)

    def __init__(self, ring, components=None, ideal=None):
        super().__init__(ring, components)
        self.ideal = ideal
        if any(n < 0 for n in self.components):
            raise InvalidReesElement("Rees elements have no negative degrees")
        if ideal is not None:
            for n, f in self.components.items():
                if not ideal.power_contains(f, n):
                    raise InvalidReesElement(f"component of degree {n} is not in I^{n}")

    def __add__(self, other):
        out = AuxLaurent.__add__(self, other)
        return ReesElement(self.ring, out.components, self.ideal)

    def __neg__(self):
        return ReesElement(self.ring, {n: -f for n, f in self.components.items()}, self.ideal)

    def __mul__(self, other):
        out = AuxLaurent.__mul__(self, other)
        return ReesElement(self.ring, out.components, self.ideal)


def rees_ext_eval(v, VI, f):
    """``min_n v(f_n) - n * VI`` over the nonzero components of ``f``."""
    if VI == INFINITY:
        raise BadParameters("V(I) must be finite")
    if f.is_zero:
        raise ZeroElement("value of the zero Rees element")
    if isinstance(f, AuxLaurent) and any(n < 0 for n in f.components):
        raise InvalidReesElement("Rees elements have no negative degrees")
    return min(v(fn) - n * VI for n, fn in f.items())


# -- quadratic transformation sequences ---------------------------------

LOCAL = ("X", "Y")


def local_ring(field):
    return PolyRing(field, LOCAL)


def chart_transform(g, chart, c):
    """Strict transform of ``g`` at the point ``c`` of the chosen chart.

    Chart 0: ``(X, Y) -> (X, X(Y + c))``, exceptional line ``X = 0``.
    Chart 1: ``(X, Y) -> (Y(X + c), Y)``, exceptional line ``Y = 0``.
    Returns ``(order, strict)``.
    """
    R = g.ring
    m = g.order()
    X, Y = R.gens
    if chart == 0:
        h = substitute(g, {0: X, 1: X * (Y + c)}, R)
    else:
        h = substitute(g, {0: Y * (X + c), 1: Y}, R)
    idx = chart
    terms = {}
    for e, coef in h.terms.items():
        ne = list(e)
        ne[idx] -= m
        terms[tuple(ne)] = coef
    return m, type(g)(R, terms)


def axis_update(alpha, beta, chart, c, m):
    """Exponents of the exceptional coordinate axes after one transform."""
    if chart == 0:
        return alpha + beta + m, (beta if c == 0 else 0)
    return (alpha if c == 0 else 0), alpha + beta + m


class DivisorialValuation:
    """``ord`` of the local ring reached by a chain of point blowups.

    ``steps[0]`` is the origin; every later step ``(chart, center)`` names a
    point on the exceptional line of the previous blowup.  Centers lie in
    ``field``, which is the base field or a one-step extension of it.
    """

    kind = "qdt"

    def __init__(self, steps, field=QQ):
        self.field = field
        norm = []
        for i, st in enumerate(steps):
            chart, center = st
            if chart not in (0, 1):
                raise ParseError("chart", "must be 0 or 1")
            norm.append((chart, field.convert(center)))
        if not norm:
            norm = [(0, field.zero)]
        norm[0] = (0, field.zero)
        self.steps = tuple(norm)

    @property
    def depth(self):
        return len(self.steps)

    @property
    def base_field(self):
        return self.field.base if isinstance(self.field, SimpleExtension) else self.field

    def __call__(self, f):
        return qdt_eval(self, f)

    def value(self, f):
        return qdt_eval(self, f)

    def prefix(self, k):
        return DivisorialValuation(self.steps[:k], self.field)

    def extend(self, chart, center, field=None):
        field = field or self.field
        steps = [(ch, field.convert(c)) for ch, c in self.steps]
        return DivisorialValuation(steps + [(chart, center)], field)

    def is_monomial(self):
        return all(c == 0 for _, c in self.steps)

    def weights(self):
        """``(V(x), V(y))`` when the sequence realizes a monomial valuation."""
        if not self.is_monomial():
            return None
        R = local_ring(self.field)
        X, Y = R.gens
        return (qdt_eval(self, X), qdt_eval(self, Y))

    def __eq__(self, other):
        return (
            isinstance(other, DivisorialValuation)
            and self.field == other.field
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        w = self.weights()
        if w is not None:
            return f"DivisorialValuation(weights={list(w)})"
        body = ", ".join(f"({ch},{self.field.format(c)})" for ch, c in self.steps[1:])
        return f"DivisorialValuation(origin, {body})"

    def to_json(self):
        out = {
            "type": "qdt",
            "steps": [{"chart": ch, "center": self.field.format(c)} for ch, c in self.steps],
        }
        if isinstance(self.field, SimpleExtension):
            out["field"] = self.field.to_json()
        w = self.weights()
        if w is not None:
            out["weights"] = list(w)
        return out


def to_local(f, field):
    """Copy of the bivariate ``f`` in the local coordinate ring over ``field``."""
    if f.ring.nvars != 2:
        raise DimensionMismatch("divisorial valuations act on two variables")
    R = local_ring(field)
    if f.ring.field != field:
        base = f.ring.field
        if isinstance(field, SimpleExtension) and field.base != base:
            raise NonRationalPoint("polynomial field does not embed in the valuation field")
    return type(f)(R, {e: field.convert(c) for e, c in f.terms.items()})


def qdt_eval(V, f):
    """Value of ``f`` under ``V`` via successive strict transforms."""
    if f.is_zero:
        return INFINITY
    g = to_local(f, V.field)
    alpha = beta = 0
    for chart, c in V.steps[1:]:
        m, g = chart_transform(g, chart, c)
        alpha, beta = axis_update(alpha, beta, chart, c, m)
    return alpha + beta + g.order()


def staircase(weights, field=QQ):
    """Chain of blowups at coordinate points realizing monomial weights ``(p, q)``."""
    p, q = (int(w) for w in weights)
    if p <= 0 or q <= 0 or math.gcd(p, q) != 1:
        raise BadParameters(f"weights {[p, q]} must be positive and coprime")
    steps = [(0, 0)]
    while (p, q) != (1, 1):
        if p < q:
            steps.append((0, 0))
            q -= p
        else:
            steps.append((1, 0))
            p -= q
    return DivisorialValuation(steps, field)


def parse_scalar(K, raw, name="center"):
    """Read a scalar; extension elements may be written in the generator."""
    if isinstance(raw, (list, tuple)) and isinstance(K, SimpleExtension):
        return K.convert([K.base.convert(str(c)) for c in raw])
    if isinstance(raw, int):
        return K.convert(raw)
    if not isinstance(raw, str):
        raise ParseError(name, "expected a string")
    if isinstance(K, SimpleExtension):
        R = PolyRing(K.base, [K.gen])
        p = parse_expr(raw, R)
        a = K.generator
        acc = K.zero
        for (k,), c in p.terms.items():
            acc = acc + K.convert(c) * a**k
        return acc
    return K.convert(raw)


def valuation_from_json(obj, field=QQ):
    from .core.field import field_from_json

    if not isinstance(obj, dict) or "type" not in obj:
        raise ParseError("valuation", "expected an object with a 'type'")
    if obj["type"] == "monomial":
        w = obj.get("w")
        if not isinstance(w, list) or not all(isinstance(x, int) for x in w):
            raise ParseError("w", "must be a list of integers")
        try:
            return MonomialValuation(w)
        except BadParameters as exc:
            raise ParseError("w", str(exc)) from None
    if obj["type"] == "qdt":
        if "field" in obj:
            field = field_from_json(obj["field"])
        steps = obj.get("steps")
        if not isinstance(steps, list) or not steps:
            raise ParseError("steps", "must be a nonempty list")
        out = []
        for st in steps:
            if not isinstance(st, dict) or "chart" not in st or "center" not in st:
                raise ParseError("steps", "each step needs 'chart' and 'center'")
            out.append((st["chart"], parse_scalar(field, st["center"])))
        return DivisorialValuation(out, field)
    raise ParseError("type", f"unknown valuation type {obj['type']!r}")
