"""Independent cross-checks used by the acceptance suite and the tests.

None of these reuse the facet enumeration, the blowup engine or the cluster
linear algebra; they recompute the same quantities by other routes.
"""

import math
from fractions import Fraction
from itertools import product

import numpy as np
import sympy
from scipy.optimize import linprog


# -- Newton polyhedron membership by linear programming -------------------------

def in_scaled_hull(gens, e, scale=1):
    """``e`` lies in ``scale * conv(gens) + R_{>=0}^d`` (feasibility LP)."""
    G = np.array(gens, dtype=float).T
    k = G.shape[1]
    res = linprog(
        np.zeros(k),
        A_ub=G,
        b_ub=np.array(e, dtype=float) / scale,
        A_eq=np.ones((1, k)),
        b_eq=[1.0],
        bounds=[(0, None)] * k,
        method="highs",
    )
    return res.status == 0


def naive_power(gens, n):
    """All exponent sums of ``n`` generators (no minimalization)."""
    d = len(gens[0])
    out = {(0,) * d}
    for _ in range(n):
        out = {tuple(a + b for a, b in zip(e, g)) for e in out for g in gens}
    return out


def closure_oracle(gens, scale=1, box=None):
    """Lattice points of the box lying in the scaled Newton polyhedron."""
    d = len(gens[0])
    box = box or [scale * max(g[i] for g in gens) for i in range(d)]
    return {e for e in product(*(range(b + 1) for b in box)) if in_scaled_hull(gens, e, scale)}


def min_last_coordinate(gens, head, scale=1):
    """Least real ``t`` with ``head + (t,)`` in ``scale`` times the Newton polyhedron, or ``None``."""
    G = np.array(gens, dtype=float)
    k = G.shape[0]
    res = linprog(
        G[:, -1],
        A_ub=G[:, :-1].T,
        b_ub=np.array(head, dtype=float) / scale,
        A_eq=np.ones((1, k)),
        b_eq=[1.0],
        bounds=[(0, None)] * k,
        method="highs",
    )
    if res.status != 0:
        return None
    return max(res.fun, 0.0) * scale


def power_decomposition_oracle(gens, n):
    """``I^{n+1}`` equals the lattice points of ``(n+1)`` times the Newton polyhedron.

    Both sets are compared column by column: for each choice of the first
    ``d - 1`` exponents the least admissible last exponent must agree.
    """
    d = len(gens[0])
    s = n + 1
    power = naive_power(gens, s)
    box = [s * max(g[i] for g in gens) for i in range(d - 1)]
    for head in product(*(range(b + 1) for b in box)):
        t = min_last_coordinate(gens, head, s)
        hull_min = None if t is None else math.ceil(t - 1e-9)
        cands = [g[-1] for g in power if all(a >= b for a, b in zip(head, g))]
        power_min = min(cands) if cands else None
        if hull_min != power_min:
            return False
    return True


def lower_hull_2d(points):
    """Vertices of the Newton polygon of planar exponent points (monotone chain)."""
    pts = sorted(set(points))
    # keep the staircase minima first
    stair = []
    best_j = math.inf
    for i, j in pts:
        if j < best_j:
            stair.append((i, j))
            best_j = j
    hull = []
    for p in stair:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            cross = (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def edge_normals_2d(points):
    hull = lower_hull_2d(points)
    out = []
    for (i1, j1), (i2, j2) in zip(hull, hull[1:]):
        p, q = j1 - j2, i2 - i1
        g = math.gcd(p, q)
        out.append(((p // g, q // g), p // g * i1 + q // g * j1))
    return out


def rank_oracle(rows):
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(Fraction(v).numerator, Fraction(v).denominator) for v in r] for r in rows]).rank()


# -- weighted initial forms of plane pencils ------------------------------------

def _wvalue(w, terms):
    return min(w[0] * i + w[1] * j for i, j in terms)


def _initial(w, terms):
    v = _wvalue(w, terms)
    return {e: c for e, c in terms.items() if w[0] * e[0] + w[1] * e[1] == v}


def _primitive(p, q):
    g = math.gcd(p, q)
    return p // g, q // g


def candidate_weights(a_terms, b_terms):
    """Edge normals of both polygons and positive zero crossings of ``w(a) - w(b)``."""
    cands = {w for w, _ in edge_normals_2d(a_terms)} | {w for w, _ in edge_normals_2d(b_terms)}
    for ea in lower_hull_2d(a_terms):
        for eb in lower_hull_2d(b_terms):
            di, dj = ea[0] - eb[0], ea[1] - eb[1]
            # p * di + q * dj = 0 with p, q > 0
            if di * dj < 0:
                cands.add(_primitive(abs(dj), abs(di)))
    cands.add((1, 1))
    return sorted(cands)


def _residue(w, ia, ib):
    """Rational function of ``tau = y^p / x^q`` equal to ``in_w(a) / in_w(b)``."""
    p, _ = w
    tau = sympy.Symbol("tau")
    ja = min(j for _, j in ia)
    jb = min(j for _, j in ib)

    def poly(terms, j0):
        return sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * tau ** ((j - j0) // p) for (i, j), c in terms.items())

    shift = (ja - jb) // p
    expr = sympy.cancel(poly(ia, ja) / poly(ib, jb) * tau**shift)
    return sympy.fraction(expr), tau


def initial_form_dicriticals(a, b):
    """Monomial dicriticals of ``a/b`` and their classes, from weighted initial forms.

    Applies to pencils over Q whose dicriticals are all monomial valuations.
    """
    at = {e: c for e, c in a.terms.items()}
    bt = {e: c for e, c in b.terms.items()}
    out = []
    for w in candidate_weights(list(at), list(bt)):
        if _wvalue(w, at) != _wvalue(w, bt):
            continue
        (num, den), tau = _residue(w, _initial(w, at), _initial(w, bt))
        pn = sympy.Poly(num, tau)
        pd = sympy.Poly(den, tau)
        if pn.degree() <= 0 and pd.degree() <= 0:
            continue
        poles = pd.sqf_part().degree() + (1 if pn.degree() > pd.degree() else 0)
        if pn.degree() <= 1 and pd.degree() <= 1:
            kind = "sharp"
        elif poles == 1:
            kind = "flat"
        else:
            kind = "plain"
        out.append((w, kind))
    return out


# -- intersection numbers from multiplicity sequences ----------------------------

def noether_intersection(V, W):
    """``sum e_i(V) e_i(W)`` over the common initial points of two chains."""
    from .cluster import zariski_cluster

    cv, cw = zariski_cluster(V), zariski_cluster(W)
    common = 0
    for (s1, s2) in zip(V.steps, W.steps):
        if s1 != s2:
            break
        common += 1
    return sum(cv.curvette[i] * cw.curvette[i] for i in range(common))


def gauss_shift_value(v, VI, xexp, components, ring):
    """Value of ``sum f_n Z^n`` through ``G = sum f_n x^(N - n) Y^n`` with ``V(x) = VI``.

    ``Y = x Z``, so the Rees value is ``min v(f_n x^(N-n)) - N v(x)``.
    """
    N = max(components)
    xm = ring.monomial(xexp)
    coeffs = [components[n] * xm ** (N - n) for n in components]
    return min(v(c) for c in coeffs) - N * VI
