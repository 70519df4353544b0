"""Building pencils and reductions with prescribed dicritical divisors."""

import random

from .cluster import (
    check_intersection_formula,
    ideal_values,
    match_valuations,
    multiplicities_from_values,
    valuation_space,
)
from .core import upoly
from .core.field import QQ, SimpleExtension
from .core.poly import PolyRing, exact_div, gcd, substitute, squarefree_radical
from .core.roots import factor, roots
from .errors import BadParameters, NonRationalPoint, PreconditionFailed, SearchExhausted
from .monomial import RETRIES, random_coeff
from .pencil import DEFAULT_MAX_DEPTH, Pencil, principalize

S_MAX = 4


def _base_field(U):
    K = U[0].base_field
    if any(V.base_field != K for V in U):
        raise BadParameters("valuations over different base fields")
    return K


def _candidates(gens, field, rng):
    """Basis elements first, then random combinations of all of them."""
    yield from gens
    for _ in range(RETRIES):
        total = gens[0].ring.zero
        for g in gens:
            total = total + random_coeff(field, rng) * g
        if not total.is_zero:
            yield total


def _attains(U, f, targets):
    return all(V(f) == t for V, t in zip(U, targets))


def construct_b(U, n, seed=0, s_max=S_MAX):
    """``(s, b)`` with ``b`` in ``I^s`` and ``V(b) = s V(I)`` for every ``V`` in ``U``."""
    if not U:
        raise BadParameters("U must be nonempty")
    K = _base_field(U)
    base = ideal_values(U, n)
    rng = random.Random(seed)
    for s in range(1, s_max + 1):
        targets = [s * v for v in base]
        gens = valuation_space(U, targets, K)
        for b in _candidates(gens, K, rng):
            if _attains(U, b, targets):
                return s, b
    raise SearchExhausted(f"no element found for s <= {s_max}")


def verify_reduction_2d(J, U, n, t=1, max_depth=DEFAULT_MAX_DEPTH):
    """The integral closure of ``J`` equals ``I^t`` for ``I`` the product of ``zeta(W)^n(W)``."""
    if not J.is_primary():
        raise PreconditionFailed("pencil is not primary at the origin")
    if gcd(J.a, J.b).degree() > 0:
        return False
    report = principalize(J, max_depth)
    if not match_valuations(report.valuations(), list(U)):
        return False
    values = [min(V(J.a), V(J.b)) for V in U]
    nj = multiplicities_from_values(list(U), values)
    if nj is None:
        return False
    return all(v == t * w for v, w in zip(nj, n))


def _usable(a, b):
    if a.is_zero or a.constant_term() != 0:
        return False
    if gcd(a, b).degree() > 0:
        return False
    return True


def construct_special_reduction(U, n, eta, m, seed=0, t_max=S_MAX, max_depth=DEFAULT_MAX_DEPTH):
    """``(t, a)`` such that ``(a, eta^(m t))`` is a reduction of ``I^t``."""
    if not check_intersection_formula(U, n, eta, m):
        raise PreconditionFailed("m V(eta) differs from V(I) for some V in U")
    K = _base_field(U)
    base = ideal_values(U, n)
    b = eta**m
    rng = random.Random(seed)
    for t in range(1, t_max + 1):
        bt = b**t
        gens = valuation_space(U, [t * v for v in base], K)
        for a in _candidates(gens, K, rng):
            if _usable(a, bt) and verify_reduction_2d(Pencil(a, bt), U, n, t, max_depth):
                return t, a
    raise SearchExhausted(f"no reduction found for t <= {t_max}")


def construct_pencil_with_dicriticals(U, seed=0, max_depth=DEFAULT_MAX_DEPTH):
    """A pencil whose dicritical divisors are exactly ``U``."""
    ones = [1] * len(U)
    s, b = construct_b(U, ones, seed)
    K = _base_field(U)
    targets = [s * v for v in ideal_values(U, ones)]
    gens = valuation_space(U, targets, K)
    rng = random.Random(seed + 1)
    for a in _candidates(gens, K, rng):
        if not _usable(a, b):
            continue
        p = Pencil(a, b)
        if match_valuations(principalize(p, max_depth).valuations(), list(U)):
            return p
    raise SearchExhausted("no pencil realizes the requested divisors")


# -- normal surface singularity z^m = f_1 ... f_n ---------------------------------

def normal_sing_dicriticals(m, forms, field=QQ):
    """Dicritical divisors of the maximal ideal of ``z^m = prod f_i(x, y)``.

    ``forms`` are pairwise coprime linear forms in ``X, Y``.  Returns the
    count, the prime generators in the chart ``x' = x/z, y' = y/z`` and the
    verified chart relation ``z^(m-n) = prod f_i(x', y')``.
    """
    n = len(forms)
    if n == 0 or m <= n:
        raise BadParameters("need m > n > 0")
    if field.characteristic and m % field.characteristic == 0:
        raise BadParameters("the characteristic divides m")
    P = PolyRing(field, ("X", "Y"))
    forms = [P(f) for f in forms]
    for f in forms:
        if f.is_zero or not f.is_homogeneous() or f.degree() != 1:
            raise BadParameters(f"{f} is not a linear form")
    for i in range(n):
        for j in range(i + 1, n):
            if gcd(forms[i], forms[j]).degree() > 0:
                raise BadParameters("forms must be pairwise coprime")
    B = PolyRing(field, ("X", "Y", "Z"))
    X, Y, Z = B.gens
    prod_B = B.one
    for f in forms:
        prod_B = prod_B * substitute(f, {0: X, 1: Y}, B)
    g = Z**m - prod_B
    A = PolyRing(field, ("x'", "y'", "z"))
    xp, yp, z = A.gens
    pulled = substitute(g, {0: xp * z, 1: yp * z, 2: z}, A)
    reduced = exact_div(pulled, z**n)
    chart_forms = [substitute(f, {0: xp, 1: yp}, A) for f in forms]
    prod_A = A.one
    for f in chart_forms:
        prod_A = prod_A * f
    relation_ok = reduced == z ** (m - n) - prod_A
    count = squarefree_radical(prod_A).degree()
    return {
        "m": m,
        "n": n,
        "g": str(g),
        "count": count,
        "prime_generators": [["z", str(f)] for f in chart_forms],
        "chart_relation": f"z^{m - n} = {prod_A}",
        "relation_ok": relation_ok,
    }


# -- pencils at infinity of a plane polynomial ----------------------------------

def jacobian_demo(f, max_depth=DEFAULT_MAX_DEPTH, extend="quadratic"):
    """Dicritical reports of ``f = const`` at each base point on the line at infinity."""
    if f.ring.nvars != 2:
        raise BadParameters("expected a polynomial in two variables")
    d = f.degree()
    if d <= 0:
        raise BadParameters("f must be nonconstant")
    K = f.ring.field
    top = f.homogeneous_component(d)
    line = [K.zero] * (d + 1)
    for (i, j), c in top.terms.items():
        line[j] = c
    points = []
    found, residual = roots(K, upoly.trim(line))
    for c, _ in found:
        points.append(("affine", K, c))
    if upoly.degree(residual) > 0:
        for phi, _ in factor(K, residual):
            if extend == "none" or K.characteristic == 0 and upoly.degree(phi) != 2 or isinstance(K, SimpleExtension):
                raise NonRationalPoint(f"point at infinity of degree {upoly.degree(phi)}")
            L = SimpleExtension(K, phi)
            points.append(("affine", L, L.generator))
    if top.coeff((0, d)) == 0:
        points.append(("vertical", K, K.zero))
    out = []
    for kind, L, c in points:
        R = PolyRing(L, ("u", "w"))
        u, w = R.gens
        fl = f.convert(f.ring.with_field(L)) if L != K else f
        a = R.zero
        for (i, j), coef in fl.terms.items():
            if kind == "affine":
                term = (c + u) ** j * w ** (d - i - j)
            else:
                term = u**i * w ** (d - i - j)
            a = a + coef * term
        b = w**d
        report = principalize(Pencil(a, b), max_depth, extend)
        label = f"[1:{L.format(c)}:0]" if kind == "affine" else "[0:1:0]"
        out.append({"point": label, "field": L.to_json(), "report": report})
    return {"degree": d, "points": out}
