"""Monomial ideals through their Newton polyhedra.

A monomial ideal is stored by its minimal exponent vectors.  The Newton
polyhedron ``conv(gens) + R_{>=0}^d`` is described exactly by facet
inequalities ``<w, e> >= value`` with primitive integer normals; its bounded
facets are the Rees valuations of the ideal.
"""

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce
from itertools import combinations, product

import numpy as np

from .core.field import QQ
from .core.laurent import AuxLaurent
from .core.linalg import graded_component_dim, nullspace, rank
from .core.poly import PolyRing
from .errors import (
    BadParameters,
    CertificationFailed,
    FieldTooSmall,
    InvalidElement,
    InvalidReesElement,
    NotEquigenerated,
    NotInIdeal,
    NotMPrimary,
    NotNormal,
    ParseError,
    SearchExhausted,
    ZeroPolynomial,
)
from .valuation import INFINITY, MonomialValuation, value_to_json

DEFAULT_NAMES = {1: ("x",), 2: ("x", "y"), 3: ("x", "y", "z"), 4: ("x", "y", "z", "w")}
COEFF_BOUND = 10
RETRIES = 64


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(exps):
    """Antichain of the minimal elements of a set of exponent vectors."""
    pts = sorted(set(tuple(e) for e in exps), key=lambda e: (sum(e), e))
    out = []
    for e in pts:
        if not any(_leq(g, e) for g in out):
            out.append(e)
    return sorted(out, reverse=True)


class MonomialIdeal:
    def __init__(self, gens, names=None):
        gens = [tuple(int(v) for v in g) for g in gens]
        if not gens:
            raise BadParameters("a monomial ideal needs at least one generator")
        d = len(gens[0])
        if d < 1 or any(len(g) != d for g in gens) or any(v < 0 for g in gens for v in g):
            raise BadParameters("generators must be exponent vectors of one length")
        self.d = d
        self.names = tuple(names) if names else DEFAULT_NAMES.get(d, tuple(f"x{i + 1}" for i in range(d)))
        self.gens = tuple(minimalize(gens))
        self._powers = {1: self.gens}
        self._poly = None

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({[list(g) for g in self.gens]})"

    def to_json(self):
        return {"vars": list(self.names), "gens": [list(g) for g in self.gens]}

    def ring(self, field=QQ):
        return PolyRing(field, self.names)

    def polys(self, field=QQ):
        R = self.ring(field)
        return [R.monomial(g) for g in self.gens]

    def contains_monomial(self, e):
        return any(_leq(g, e) for g in self.gens)

    def is_m_primary(self):
        return all(
            any(g[i] > 0 and sum(g) == g[i] for g in self.gens) for i in range(self.d)
        )

    def is_equigenerated(self):
        return len({sum(g) for g in self.gens}) == 1

    def power_gens(self, n):
        if n == 0:
            return ((0,) * self.d,)
        if n not in self._powers:
            half = self.power_gens(n // 2)
            sq = [tuple(a + b for a, b in zip(g, h)) for g in half for h in half]
            if n % 2:
                sq = [tuple(a + b for a, b in zip(g, h)) for g in sq for h in self.gens]
            self._powers[n] = tuple(minimalize(sq))
        return self._powers[n]

    def power(self, n):
        return MonomialIdeal(self.power_gens(n), self.names)

    def product(self, other):
        return MonomialIdeal(
            [tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens], self.names
        )

    def power_contains(self, f, n):
        """Every term of the polynomial ``f`` lies in ``I^n``."""
        gens = self.power_gens(n)
        return all(any(_leq(g, e) for g in gens) for e in f.terms)

    def contains(self, f):
        return self.power_contains(f, 1)


def ideal_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("ideal", "expected an object")
    if "gens" not in obj:
        raise ParseError("gens", "required")
    gens = obj["gens"]
    if not isinstance(gens, list) or not gens:
        raise ParseError("gens", "must be a nonempty list of exponent vectors")
    names = obj.get("vars")
    if names is None:
        raise ParseError("vars", "required")
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise ParseError("vars", "must be a list of names")
    for g in gens:
        if not isinstance(g, list) or len(g) != len(names) or not all(isinstance(v, int) and v >= 0 for v in g):
            raise ParseError("gens", f"bad exponent vector {g}")
    return MonomialIdeal(gens, names)


# -- Newton polyhedron -------------------------------------------------------

@dataclass(frozen=True)
class Facet:
    weights: tuple
    value: int

    def holds(self, e):
        return sum(a * b for a, b in zip(self.weights, e)) >= self.value

    def contains(self, e):
        return sum(a * b for a, b in zip(self.weights, e)) == self.value

    def to_json(self):
        return [list(self.weights), self.value]


@dataclass
class NewtonPolyhedron:
    d: int
    facets: list
    vertices: list
    bounded: bool = dc_field(default=True)

    def contains(self, e, scale=1):
        return all(sum(a * b for a, b in zip(f.weights, e)) >= scale * f.value for f in self.facets)

    def to_json(self):
        return {
            "facets": [f.to_json() for f in self.facets],
            "vertices": [list(v) for v in self.vertices],
        }


def _primitive(vec):
    den = reduce(math.lcm, (Fraction(v).denominator for v in vec), 1)
    ints = [int(Fraction(v) * den) for v in vec]
    g = reduce(math.gcd, (abs(v) for v in ints), 0)
    return [v // g for v in ints] if g else ints


def newton_polyhedron(I):
    """Exact facet description of ``conv(gens) + orthant``.

    Facets lying on coordinate hyperplanes are left implicit.
    """
    d, gens = I.d, I.gens
    facets = {}
    for k in range(0, d):
        # k coordinates with zero weight, d - k generators spanning the facet
        for S in combinations(range(d), k):
            for pts in combinations(gens, d - k):
                rows = [[Fraction(v) for v in g] + [Fraction(-1)] for g in pts]
                rows += [[Fraction(int(i == s)) for i in range(d)] + [Fraction(0)] for s in S]
                ns = nullspace(rows, d + 1, QQ)
                if len(ns) != 1:
                    continue
                vec = _primitive(ns[0])
                if vec[d] < 0 or (vec[d] == 0 and any(v < 0 for v in vec[:d])):
                    vec = [-v for v in vec]
                w, val = tuple(vec[:d]), vec[d]
                if val <= 0 or any(v < 0 for v in w) or (w, val) in facets:
                    continue
                f = Facet(w, val)
                if not all(f.holds(g) for g in gens):
                    continue
                on = [g for g in gens if f.contains(g)]
                span = [[Fraction(a - b) for a, b in zip(g, on[0])] for g in on[1:]]
                span += [[Fraction(int(i == s)) for i in range(d)] for s in range(d) if w[s] == 0]
                if rank(span, QQ) == d - 1:
                    facets[(w, val)] = f
    fl = sorted(facets.values(), key=lambda f: (f.weights, f.value))
    vertices = []
    for g in gens:
        normals = [[Fraction(v) for v in f.weights] for f in fl if f.contains(g)]
        normals += [[Fraction(int(i == s)) for i in range(d)] for s in range(d) if g[s] == 0]
        if rank(normals, QQ) == d:
            vertices.append(g)
    return NewtonPolyhedron(d, fl, sorted(vertices, reverse=True), I.is_m_primary())


def _box(gens, scale=1):
    d = len(gens[0])
    return [scale * max(g[i] for g in gens) for i in range(d)]


def integral_closure(I):
    """Minimal generators of the lattice points of the Newton polyhedron."""
    P = newton_polyhedron(I)
    box = _box(I.gens)
    pts = [e for e in product(*(range(b + 1) for b in box)) if P.contains(e)]
    return MonomialIdeal(pts, I.names)


def is_complete(I):
    return integral_closure(I) == I


def _require_m_primary(I):
    if not I.is_m_primary():
        raise NotMPrimary(f"{I} is not primary to the maximal ideal")


def is_normal(I, bound=None):
    """All powers up to ``bound`` (default ``d - 1``) are integrally closed."""
    _require_m_primary(I)
    if I.d == 2:
        # complete ideals in a 2-dimensional regular local ring are normal
        return is_complete(I)
    bound = I.d - 1 if bound is None else bound
    return all(is_complete(I.power(n)) for n in range(1, bound + 1))


def rees_valuations(I):
    """``[(MonomialValuation, V_j(I))]``, one entry per bounded facet, sorted by weights."""
    _require_m_primary(I)
    P = newton_polyhedron(I)
    return [(MonomialValuation(f.weights), f.value) for f in P.facets]


def _lattice_mask(gens, box):
    """Boolean array over the box marking exponents in the ideal generated by ``gens``."""
    shape = tuple(b + 1 for b in box)
    mask = np.zeros(shape, dtype=bool)
    for g in gens:
        if all(gi <= b for gi, b in zip(g, box)):
            mask[tuple(slice(gi, None) for gi in g)] = True
    return mask


def _value_mask(rees, box, scale):
    grids = np.indices(tuple(b + 1 for b in box))
    mask = np.ones(grids.shape[1:], dtype=bool)
    for v, val in rees:
        total = sum(w * grids[i] for i, w in enumerate(v.weights))
        mask &= total >= scale * val
    return mask


def verify_power_decomposition(I, n, check_normal=True, bound=None):
    """``I^{n+1}`` equals the set cut out by ``V_j >= (n+1) V_j(I)`` for all ``j``."""
    _require_m_primary(I)
    if check_normal and not is_normal(I, bound):
        raise NotNormal(f"{I} is not normal")
    rees = rees_valuations(I)
    top = max(max(g) for g in I.gens)
    box = [(n + 1) * top + 1] * I.d
    return bool(np.array_equal(_lattice_mask(I.power_gens(n + 1), box), _value_mask(rees, box, n + 1)))


def rees_graded_membership(f, I):
    """Decide ``f`` in each ``P-bar*_j`` by values and cross-check by closures."""
    _require_m_primary(I)
    if f.is_zero:
        raise InvalidReesElement("element has no nonzero component")
    if any(n < 0 for n in f.components):
        raise InvalidReesElement("negative degree in a Rees element")
    rees = rees_valuations(I)
    flags = []
    for v, val in rees:
        flags.append(all(v(fn) >= (n + 1) * val for n, fn in f.items()))
    closure_route = all(
        integral_closure(I.power(n + 1)).contains_monomial(e) for n, fn in f.items() for e in fn.terms
    )
    overall = all(flags)
    return {
        "per_j": flags,
        "overall": overall,
        "closure_route": closure_route,
        "agree": overall == closure_route,
    }


def value_criterion(I, x, j):
    """``V_j(x) == V_j(I)`` for ``x`` in ``I`` (``j`` is 0-based)."""
    if x.is_zero:
        raise ZeroPolynomial("zero element")
    if not I.contains(x):
        raise NotInIdeal(f"{x} is not in the ideal")
    v, val = rees_valuations(I)[j]
    return v(x) == val


@dataclass
class FiberConeSlice:
    n: int
    basis: list

    @property
    def dim(self):
        return len(self.basis)

    def to_json(self):
        return {"n": self.n, "dim": self.dim, "basis": [list(e) for e in self.basis]}


def fiber_hilbert(I, n):
    return FiberConeSlice(n, list(I.power_gens(n)))


# -- element searches ---------------------------------------------------------

def random_coeff(K, rng, nonzero=True):
    if K.is_finite:
        elems = [e for e in K.elements() if not nonzero or e != 0] if K.order <= 10_000 else None
        if elems is None:
            while True:
                v = K.convert(rng.randrange(K.characteristic))
                if v != 0 or not nonzero:
                    return v
        return rng.choice(elems)
    return K.convert(rng.choice([c for c in range(-COEFF_BOUND, COEFF_BOUND + 1) if c != 0]))


def _witness_ok(I, x, rees, idx):
    return all(rees[j][0](x) == rees[j][1] for j in idx)


def find_element(I, j_indices=None, seed=0, field=QQ):
    """An element ``x`` of ``I`` with ``V_j(x) = V_j(I)`` for the requested ``j``."""
    rees = rees_valuations(I)
    idx = list(range(len(rees))) if j_indices is None else list(j_indices)
    for j in idx:
        if not 0 <= j < len(rees):
            raise BadParameters(f"index {j} out of range 0..{len(rees) - 1}")
    R = I.ring(field)
    rng = random.Random(seed)
    gens = sorted(I.gens, reverse=True)
    for g in gens:
        x = R.monomial(g)
        if _witness_ok(I, x, rees, idx):
            return x
    for size in range(2, len(gens) + 1):
        for subset in combinations(gens, size):
            covered = all(any(rees[j][0].monomial_value(g) == rees[j][1] for g in subset) for j in idx)
            if not covered:
                continue
            for _ in range(RETRIES):
                x = R.from_terms([(g, random_coeff(field, rng)) for g in subset])
                if _witness_ok(I, x, rees, idx):
                    return x
    raise FieldTooSmall("no element attains every requested value")


def find_element_power(I, r=1, seed=0, s_max=4, field=QQ):
    """Smallest ``s <= s_max`` with a witness ``x`` in ``I^{rs}``; returns ``(s, x)``."""
    if r < 1:
        raise BadParameters("r must be positive")
    rees = rees_valuations(I)
    for s in range(1, s_max + 1):
        Q = I.power(r * s)
        try:
            x = find_element(Q, seed=seed, field=field)
        except FieldTooSmall:
            continue
        if all(v(x) == r * s * val for v, val in rees):
            return s, x
    raise SearchExhausted(f"no witness for s <= {s_max}")


def _require_equigenerated(I):
    if not I.is_equigenerated():
        raise NotEquigenerated(f"{I} is not generated in a single degree")
    return sum(I.gens[0])


def certify_reduction(I, J, n_max=6):
    """Smallest ``n <= n_max`` with ``I^{n+1} = J I^n``, compared degree-wise.

    Returns ``{"n": n, "dims": [dim I^{n+1}, dim J I^n]}`` or ``None``.
    """
    D = _require_equigenerated(I)
    R = I.ring(J[0].ring.field) if J else I.ring()
    J = [R(f) if f.ring != R else f for f in J]
    for f in J:
        if f.is_zero or not f.is_homogeneous() or f.degree() != D:
            raise NotInIdeal(f"{f} is not a nonzero form of degree {D}")
        if not I.contains(f):
            raise NotInIdeal(f"{f} is not in the ideal")
    for n in range(n_max + 1):
        deg = (n + 1) * D
        big = [R.monomial(g) for g in I.power_gens(n + 1)]
        small = [f * R.monomial(m) for f in J for m in I.power_gens(n)]
        a = graded_component_dim(big, deg, R)
        b = graded_component_dim(small, deg, R)
        if a == b:
            return {"n": n, "dims": [a, b]}
    return None


def _values_ok(rees, xs, scale=1):
    return all(v(x) == scale * val for x in xs for v, val in rees)


def find_reduction(I, seed=0, x1=None, field=QQ, n_max=6, s_max=3):
    """``d`` elements generating a reduction of ``I`` (or of a power over small fields).

    Returns ``{"J": [...], "power": s, "certificate": {...}}``.
    """
    D = _require_equigenerated(I)
    rees = rees_valuations(I)
    R = I.ring(field)
    if x1 is not None:
        x1 = R(x1) if x1.ring != R else x1
        if x1.is_zero or not x1.is_homogeneous() or x1.degree() != D or not I.contains(x1):
            raise InvalidElement(f"{x1} is not a form of degree {D} in the ideal")
        if not _values_ok(rees, [x1]):
            raise InvalidElement(f"{x1} does not attain every Rees value of the ideal")
    rng = random.Random(seed)
    powers = range(1, (s_max if field.is_finite else 1) + 1)
    for s in powers:
        Q = I.power(s)
        gens = [R.monomial(g) for g in Q.gens]
        seeded = [x1**s] if x1 is not None else []
        for _ in range(RETRIES):
            xs = list(seeded)
            while len(xs) < I.d:
                xs.append(sum((random_coeff(field, rng, nonzero=False) * g for g in gens), R.zero))
            if any(x.is_zero for x in xs) or not _values_ok(rees, xs, s):
                continue
            cert = certify_reduction(Q, xs, n_max)
            if cert is not None:
                return {"J": xs, "power": s, "certificate": cert}
    if field.is_finite:
        raise FieldTooSmall(f"no reduction found over a field of order {field.order}")
    raise CertificationFailed("no random choice was certified as a reduction")


# -- extended Rees algebra ----------------------------------------------------

class ExtReesElement(AuxLaurent):
    """``sum_n f_n Z^n`` with ``f_n`` in ``I^n`` for ``n >= 0``."""

    __slots__ = ("ideal",)

    def __init__(self, ring, components, ideal):
        super().__init__(ring, components)
        self.ideal = ideal
        for n, f in self.components.items():
            if n >= 0 and not ideal.power_contains(f, n):
                raise InvalidElement(f"component of degree {n} is not in I^{n}")


def in_extended_rees(f_components, I):
    return all(n < 0 or I.power_contains(fn, n) for n, fn in f_components.items())


def extended_value(v, VI, components):
    """``min_n v(f_n) - n VI`` over all integer degrees."""
    return min((v(fn) - n * VI for n, fn in components.items()), default=INFINITY)


def ext_rees_check(f, I):
    """Degree split, the ``Z f`` versus ``f in IE`` equivalence, and ``w_j(Z^-1)``."""
    _require_m_primary(I)
    if not isinstance(f, ExtReesElement):
        f = ExtReesElement(f.ring, f.components, I)
    negative = {n: g for n, g in f.components.items() if n < 0}
    nonneg = {n: g for n, g in f.components.items() if n >= 0}
    report = {
        "negative": sorted(negative),
        "nonnegative": sorted(nonneg),
        "split_ok": set(negative) | set(nonneg) == set(f.components),
    }
    if not negative:
        shifted = {n + 1: g for n, g in nonneg.items()}
        via_shift = in_extended_rees(shifted, I)
        IIn = {n: I.product(I.power(n)) for n in nonneg}
        via_ie = all(IIn[n].contains(g) for n, g in nonneg.items())
        report["z_f_in_ext"] = via_shift
        report["f_in_IE"] = via_ie
        report["equivalent"] = via_shift == via_ie
    R = f.ring
    zinv = {-1: R.one}
    values = []
    for v, val in rees_valuations(I):
        w = extended_value(v, val, zinv)
        values.append({"weights": list(v.weights), "w_zinv": value_to_json(w), "V_I": val, "ok": w == val and w > 0})
    report["w_zinv"] = values
    return report
