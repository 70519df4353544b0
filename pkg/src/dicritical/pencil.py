"""Pencils ``z = a/b`` at the origin of the plane and their principalization.

Blowing up every base point until the ideal ``(a, b)`` becomes principal
produces the base cluster; an exceptional line on which ``z`` restricts to a
nonconstant function is a dicritical divisor.
"""

from dataclasses import dataclass, field as dc_field

from .core import upoly
from .core.field import SimpleExtension
from .core.poly import gcd, exact_div, poly_from_json, squarefree_radical, substitute
from .core.roots import factor, roots
from .errors import DepthExceeded, DimensionMismatch, NonRationalPoint, ParseError, ZeroPolynomial
from .valuation import DivisorialValuation, local_ring, qdt_eval, to_local, value_to_json

DEFAULT_MAX_DEPTH = 24


@dataclass(frozen=True)
class Pencil:
    a: object
    b: object

    @property
    def ring(self):
        return self.a.ring

    def is_primary(self):
        return self.a.constant_term() == 0 and self.b.constant_term() == 0

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json()}

    def __str__(self):
        return f"({self.a})/({self.b})"


def pencil_normalize(a, b):
    """Cancel the common factor of ``a`` and ``b``."""
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("pencil numerator and denominator must be nonzero")
    if a.ring != b.ring:
        raise DimensionMismatch("numerator and denominator live in different rings")
    if a.ring.nvars != 2:
        raise DimensionMismatch("pencils live in two variables")
    g = gcd(a, b)
    if g.degree() > 0:
        a, b = exact_div(a, g), exact_div(b, g)
    return Pencil(a, b)


def pencil_from_json(obj):
    if not isinstance(obj, dict):
        raise ParseError("pencil", "expected an object")
    for key in ("a", "b"):
        if key not in obj:
            raise ParseError(key, "required")
    a = poly_from_json(obj["a"])
    bobj = obj["b"]
    b = poly_from_json(bobj, a.ring if "vars" not in bobj else None)
    if b.ring != a.ring:
        raise ParseError("b", "must use the same variables and field as a")
    return Pencil(a, b)


# -- records -----------------------------------------------------------------

@dataclass
class ClusterPoint:
    index: int
    parent: object
    chart: int
    center: object
    field: object
    depth: int
    multiplicity: int = 0

    @property
    def degree(self):
        """Degree of the residue field of the point over the base field."""
        return self.field.degree if isinstance(self.field, SimpleExtension) else 1

    def to_json(self):
        out = {
            "index": self.index,
            "parent": self.parent,
            "chart": self.chart,
            "center": self.field.format(self.center),
            "depth": self.depth,
            "multiplicity": self.multiplicity,
        }
        if isinstance(self.field, SimpleExtension):
            out["field"] = self.field.to_json()
        return out


@dataclass
class Cluster:
    points: list = dc_field(default_factory=list)
    proximity: list = dc_field(default_factory=list)

    def multiplicities(self):
        return [p.multiplicity for p in self.points]

    def to_json(self):
        return {
            "points": [p.to_json() for p in self.points],
            "proximity": self.proximity,
        }


@dataclass
class DicriticalRecord:
    valuation: DivisorialValuation
    Va: object
    Vb: object
    numerator: list
    denominator: list
    kind: str
    point: int

    @property
    def weights(self):
        return self.valuation.weights()

    def residue_str(self):
        K = self.valuation.field

        def fmt(f):
            parts = []
            for i in reversed(range(len(f))):
                c = f[i]
                if c == 0:
                    continue
                cs = K.format(c)
                if any(ch in cs[1:] for ch in "+-"):
                    cs = f"({cs})"
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                if not mono:
                    parts.append(cs)
                elif cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append(f"{cs}*{mono}")
            return " + ".join(parts).replace("+ -", "- ") or "0"

        return f"({fmt(self.numerator)})/({fmt(self.denominator)})"

    def to_json(self):
        K = self.valuation.field
        out = {
            "valuation": self.valuation.to_json(),
            "Va": value_to_json(self.Va),
            "Vb": value_to_json(self.Vb),
            "residue": {
                "num": [K.format(c) for c in self.numerator],
                "den": [K.format(c) for c in self.denominator],
            },
            "class": self.kind,
            "point": self.point,
        }
        w = self.weights
        if w is not None:
            out["weights"] = list(w)
        return out


@dataclass
class PencilReport:
    pencil: Pencil
    base_cluster: Cluster
    dicriticals: list
    special: bool
    primary: bool
    depth_used: int

    def valuations(self):
        return [r.valuation for r in self.dicriticals]

    def to_json(self):
        return {
            "pencil": {"a": str(self.pencil.a), "b": str(self.pencil.b)},
            "primary": self.primary,
            "special": self.special,
            "depth_used": self.depth_used,
            "base_cluster": self.base_cluster.to_json(),
            "dicriticals": [r.to_json() for r in self.dicriticals],
        }


# -- residue classification --------------------------------------------------

def distinct_root_count(K, f):
    """Number of distinct roots over an algebraic closure (perfect ``K``)."""
    from .core.poly import PolyRing

    f = upoly.trim(f)
    if len(f) <= 1:
        return 0
    R = PolyRing(K, ["t"])
    p = R.from_terms({(i,): c for i, c in enumerate(f) if c != 0})
    return squarefree_radical(p).degree()


def classify_residue(K, num, den, rational_point=True):
    """``sharp``, ``flat`` or ``plain`` for the reduced residue ``num/den``."""
    dn, dd = upoly.degree(num), upoly.degree(den)
    poles = distinct_root_count(K, den) + (1 if dn > dd else 0)
    if dn <= 1 and dd <= 1 and rational_point:
        return "sharp"
    return "flat" if poles == 1 else "plain"


def special_flag(b):
    """``b`` is a unit times a power of one regular parameter at the origin."""
    if b.constant_term() != 0:
        return False
    return squarefree_radical(b).order() <= 1


# -- blowing up --------------------------------------------------------------

def pull_back(g, chart, c, m):
    """``g`` composed with the chart map and divided by the ``m``-th power of the exceptional line."""
    R = g.ring
    X, Y = R.gens
    if chart == 0:
        h = substitute(g, {0: X, 1: X * (Y + c)}, R)
    else:
        h = substitute(g, {0: Y * (X + c), 1: Y}, R)
    terms = {}
    for e, coef in h.terms.items():
        ne = list(e)
        ne[chart] -= m
        terms[tuple(ne)] = coef
    return type(g)(R, terms)


def _line_restriction(form, K):
    """Dense coefficients of ``form(1, t)`` for a homogeneous ``form``."""
    if form.is_zero:
        return []
    deg = form.degree()
    out = [K.zero] * (deg + 1)
    for (i, j), c in form.terms.items():
        out[j] = c
    return upoly.trim(out)


def _at_infinity_vanishes(form, o, m):
    return o > m or form.coeff((0, form.degree())) == 0


@dataclass
class _Node:
    steps: list
    field: object
    a: object
    b: object
    axes: tuple
    parent: object
    chart: int
    center: object


def _convert(g, L):
    R = local_ring(L)
    return type(g)(R, {e: L.convert(c) for e, c in g.terms.items()})


def principalize(p, max_depth=DEFAULT_MAX_DEPTH, extend="quadratic"):
    """Resolve the base points of ``p`` and collect its dicritical divisors."""
    if extend not in ("none", "quadratic"):
        raise ParseError("extend", "must be 'none' or 'quadratic'")
    p = pencil_normalize(p.a, p.b)
    K0 = p.ring.field
    special = special_flag(p.b)
    cluster = Cluster()
    if not p.is_primary():
        return PencilReport(p, cluster, [], special, False, 0)
    root = _Node([(0, K0.zero)], K0, to_local(p.a, K0), to_local(p.b, K0), (None, None), None, 0, K0.zero)
    stack = [root]
    records = []
    depth_used = 0
    while stack:
        node = stack.pop()
        depth = len(node.steps)
        if depth > max_depth:
            raise DepthExceeded(f"base points persist beyond depth {max_depth}")
        depth_used = max(depth_used, depth)
        idx = len(cluster.points)
        a, b, K = node.a, node.b, node.field
        oa, ob = a.order(), b.order()
        m = min(oa, ob)
        cluster.points.append(ClusterPoint(idx, node.parent, node.chart, node.center, K, depth, m))
        prox = {i for i in (node.parent, *node.axes) if i is not None}
        for row in cluster.proximity:
            row.append(0)
        cluster.proximity.append([1 if (j in prox or j == idx) else 0 for j in range(idx + 1)])

        ina = a.homogeneous_component(m)
        inb = b.homogeneous_component(m)
        A = _line_restriction(ina, K)
        B = _line_restriction(inb, K)
        V = DivisorialValuation(node.steps, K)
        if oa == ob and not _proportional(ina, inb):
            g = upoly.gcd(K, A, B)
            num = upoly.divmod_(K, A, g)[0]
            den = upoly.divmod_(K, B, g)[0]
            lc = den[-1]
            num = upoly.scale(num, K.one / lc)
            den = upoly.monic(K, den)
            # degree bookkeeping at t = infinity uses the full forms
            rational = not isinstance(K, SimpleExtension)
            kind = classify_residue(K, num, den, rational)
            Va, Vb = qdt_eval(V, p.a), qdt_eval(V, p.b)
            records.append(DicriticalRecord(V, Va, Vb, num, den, kind, idx))

        children = []
        common = upoly.gcd(K, A, B) if A and B else upoly.monic(K, A or B)
        if upoly.degree(common) > 0:
            found, residual = roots(K, common)
            for c, _ in found:
                children.append(_child(node, idx, a, b, 0, c, m, K, None))
            if upoly.degree(residual) > 0:
                for phi, _ in factor(K, residual):
                    L = _extension(K, phi, extend)
                    children.append(_child(node, idx, a, b, 0, L.generator, m, K, L))
        if _at_infinity_vanishes(ina, oa, m) and _at_infinity_vanishes(inb, ob, m):
            children.append(_child(node, idx, a, b, 1, K.zero, m, K, None))
        stack.extend(reversed(children))
    return PencilReport(p, cluster, records, special, True, depth_used)


def _proportional(f, g):
    if f.is_zero or g.is_zero:
        return True
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    return f * cg == g * cf


def _extension(K, phi, extend):
    if isinstance(K, SimpleExtension):
        raise NonRationalPoint("base point needs a second residue field extension")
    if extend == "none":
        raise NonRationalPoint("base point is not rational and extensions are disabled")
    if K.characteristic == 0 and upoly.degree(phi) != 2:
        raise NonRationalPoint(f"base point of degree {upoly.degree(phi)} over Q")
    try:
        return SimpleExtension(K, phi)
    except ParseError as exc:
        raise NonRationalPoint(str(exc)) from None


def _child(node, idx, a, b, chart, c, m, K, L):
    steps = node.steps
    if L is not None:
        a, b = _convert(a, L), _convert(b, L)
        steps = [(ch, L.convert(s)) for ch, s in steps]
        field = L
    else:
        field = K
    a2 = pull_back(a, chart, c, m)
    b2 = pull_back(b, chart, c, m)
    if chart == 0:
        axes = (idx, node.axes[1] if c == 0 else None)
    else:
        axes = (node.axes[0] if c == 0 else None, idx)
    return _Node(steps + [(chart, c)], field, a2, b2, axes, idx, chart, c)
