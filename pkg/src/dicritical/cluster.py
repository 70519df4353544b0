"""Simple complete ideals of divisorial valuations and their intersection data.

For a divisorial valuation ``V`` given by a chain of points, the simple
complete ideal ``zeta(V) = {f : V(f) >= k}`` is computed by linear algebra on
pulled-back monomials, where ``k`` comes from the proximity relations of the
chain.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .core.field import SimpleExtension
from .core.linalg import nullspace, solve
from .core.poly import PolyRing, substitute
from .errors import NotRegularParameter
from .pencil import Cluster, ClusterPoint
from .valuation import to_local

PLANE = ("x", "y")


def element_degree(K, c):
    """Degree of ``c`` over the prime subfield of ``K``."""
    if not isinstance(K, SimpleExtension):
        return 1
    if all(v == 0 for v in c.coords[1:]):
        return 1
    if not K.is_finite:
        return K.degree
    q = K.base.order
    x, d = c**q, 1
    while x != c:
        x, d = x**q, d + 1
    return d


def zariski_cluster(V):
    """Chain of centers of ``V`` with proximity matrix and multiplicities.

    ``multiplicities`` are those of the simple ideal ``zeta(V)`` over the base
    field; ``curvette`` holds the multiplicities of one geometric branch.
    """
    K = V.field
    n = len(V.steps)
    degrees = []
    deg = 1
    axes = (None, None)
    points, prox = [], []
    for i, (chart, c) in enumerate(V.steps):
        if i > 0:
            deg = math.lcm(deg, element_degree(K, c))
        degrees.append(deg)
        if i > 0:
            axes = (i - 1, axes[1] if c == 0 else None) if chart == 0 else (axes[0] if c == 0 else None, i - 1)
        near = {a for a in axes if a is not None}
        points.append(ClusterPoint(i, i - 1 if i else None, chart, c, K, i + 1))
        prox.append([1 if (j in near or j == i) else 0 for j in range(n)])
    curvette = [0] * n
    weighted = [0] * n
    curvette[-1] = weighted[-1] = 1
    for i in range(n - 2, -1, -1):
        curvette[i] = sum(curvette[j] for j in range(i + 1, n) if prox[j][i])
        weighted[i] = sum(weighted[j] * degrees[j] // degrees[i] for j in range(i + 1, n) if prox[j][i])
    for p, mult in zip(points, weighted):
        p.multiplicity = mult
    cl = Cluster(points, prox)
    cl.curvette = curvette
    cl.degrees = degrees
    return cl


def zeta_value(V):
    """``V(zeta(V))``: multiplicities of the ideal paired with a curvette of ``V``."""
    cl = zariski_cluster(V)
    return sum(m * e for m, e in zip(cl.multiplicities(), cl.curvette))


def total_pullback(V, f, trunc):
    """``f`` in the coordinates of the last center of ``V``, truncated below degree ``trunc``."""
    g = to_local(f, V.field)
    R = g.ring
    X, Y = R.gens
    for chart, c in V.steps[1:]:
        if chart == 0:
            g = substitute(g, {0: X, 1: X * (Y + c)}, R)
        else:
            g = substitute(g, {0: Y * (X + c), 1: Y}, R)
        # chart maps never lower the degree of a term
        g = g.truncate(trunc)
    return g.truncate(trunc)


def _monomials_below(N):
    out = []
    for d in range(N):
        for i in range(d, -1, -1):
            out.append((i, d - i))
    return out


def valuation_space(Vs, targets, base_field):
    """Generators of ``{f : V(f) >= target_V for every V}`` in ``base_field[x, y]``.

    Returns polynomials of degree ``< N`` spanning the solution space followed
    by the degree-``N`` monomials not already multiples of a monomial solution.
    """
    R = PolyRing(base_field, PLANE)
    x, y = R.gens
    vm = [min(V(x), V(y)) for V in Vs]
    N = max(max(-(-t // v) for t, v in zip(targets, vm)), 1)
    cols = _monomials_below(N)
    rows = []
    for V, t in zip(Vs, targets):
        L = V.field
        pulled = [total_pullback(V, R.monomial(e), t) for e in cols]
        keys = sorted({k for p in pulled for k in p.terms})
        for k in keys:
            entries = [p.coeff(k) for p in pulled]
            if isinstance(L, SimpleExtension) and L.base == base_field:
                coords = [L.to_base(c) for c in entries]
                for r in range(L.degree):
                    rows.append([cc[r] for cc in coords])
            else:
                rows.append([base_field.convert(c) for c in entries])
    basis = nullspace(rows, len(cols), base_field)
    gens = [R.from_terms(list(zip(cols, vec))) for vec in basis]
    mono = [next(iter(g.terms)) for g in gens if g.is_monomial()]

    def redundant(e, pool):
        return any(m != e and e[0] >= m[0] and e[1] >= m[1] for m in pool)

    gens = [g for g in gens if not (g.is_monomial() and redundant(next(iter(g.terms)), mono))]
    for i in range(N, -1, -1):
        e = (i, N - i)
        if not any(e[0] >= m[0] and e[1] >= m[1] for m in mono):
            gens.append(R.monomial(e))
    return gens


@lru_cache(maxsize=512)
def zeta_generators(V):
    """Generating set of the simple complete ideal of ``V``."""
    return tuple(valuation_space([V], [zeta_value(V)], V.base_field))


def intersection(V, W):
    """``c(V, W) = V(zeta(W))``."""
    return min(V(g) for g in zeta_generators(W))


def same_valuation(V, W):
    if V == W:
        return True
    kv, kw = zeta_value(V), zeta_value(W)
    return all(V(g) >= kv for g in zeta_generators(W)) and all(W(g) >= kw for g in zeta_generators(V))


def match_valuations(found, wanted):
    """``found`` and ``wanted`` describe the same set of valuations."""
    if len(found) != len(wanted):
        return False
    remaining = list(wanted)
    for V in found:
        hit = next((i for i, W in enumerate(remaining) if same_valuation(V, W)), None)
        if hit is None:
            return False
        remaining.pop(hit)
    return True


def ideal_values(U, n):
    """``V(I)`` for each ``V`` in ``U``, where ``I`` is the product of ``zeta(W)^n(W)``."""
    return [sum(nw * intersection(V, W) for W, nw in zip(U, n)) for V in U]


def divisor_value_on_cluster(U, n, V):
    return sum(nw * intersection(V, W) for W, nw in zip(U, n))


def check_intersection_formula(U, n, eta, m):
    """``m * V(eta) == sum_W n(W) c(V, W)`` for every ``V`` in ``U``."""
    if eta.order() != 1:
        raise NotRegularParameter(f"{eta} is not a regular parameter")
    return all(m * V(eta) == divisor_value_on_cluster(U, n, V) for V in U)


def multiplicities_from_values(U, values):
    """Solve ``values = C n`` for ``n`` with ``C = (c(V, W))``; ``None`` if singular."""
    from .core.field import QQ

    C = [[Fraction(intersection(V, W)) for W in U] for V in U]
    sol = solve(C, [Fraction(v) for v in values], QQ)
    return sol
