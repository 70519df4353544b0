"""Sparse multivariate polynomials over the exact fields of :mod:`.field`.

A :class:`PolyRing` fixes the coefficient field and the variable names; a
:class:`MultiPolynomial` is an immutable map from exponent tuples to nonzero
coefficients.

    >>> R, (x, y) = poly_ring("x,y")
    >>> (x + y) * (x - y)
    x^2 - y^2
"""

import re
from fractions import Fraction
from itertools import combinations_with_replacement

from .field import QQ, ExtElement, GF, field_from_json
from ..errors import DimensionMismatch, FieldMismatch, ParseError, ZeroPolynomial


class PolyRing:
    def __init__(self, field, names):
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
        )

    def __hash__(self):
        return hash((self.field, self.names))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {','.join(self.names)})"

    @property
    def zero(self):
        return MultiPolynomial(self, {})

    @property
    def one(self):
        return self.constant(1)

    @property
    def gens(self):
        return [self.monomial(tuple(int(i == j) for j in range(self.nvars))) for i in range(self.nvars)]

    def constant(self, c):
        c = self.field.convert(c)
        return MultiPolynomial(self, {(0,) * self.nvars: c} if c != 0 else {})

    def monomial(self, e, c=1):
        e = tuple(int(v) for v in e)
        if len(e) != self.nvars or min(e, default=0) < 0:
            raise DimensionMismatch(f"bad exponent vector {e} for {self.nvars} variables")
        c = self.field.convert(c)
        return MultiPolynomial(self, {e: c} if c != 0 else {})

    def from_terms(self, terms):
        """Build from ``{exponent: coefficient}`` or ``[(exponent, coefficient)]``."""
        items = terms.items() if isinstance(terms, dict) else terms
        out = {}
        K = self.field
        for e, c in items:
            e = tuple(e)
            if len(e) != self.nvars:
                raise DimensionMismatch(f"exponent {e} has wrong length")
            out[e] = out.get(e, K.zero) + K.convert(c)
        return MultiPolynomial(self, {e: c for e, c in out.items() if c != 0})

    def __call__(self, obj):
        if isinstance(obj, MultiPolynomial):
            return obj.convert(self)
        if isinstance(obj, str):
            return parse_expr(obj, self)
        return self.constant(obj)

    def with_field(self, field):
        return PolyRing(field, self.names)

    def with_names(self, names):
        return PolyRing(self.field, names)

    def monomials_of_degree(self, d):
        n = self.nvars
        out = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out

    def to_json(self):
        return {"vars": list(self.names), "field": self.field.to_json()}


def poly_ring(names, field=QQ):
    R = PolyRing(field, names)
    return R, R.gens


class MultiPolynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- coercion -------------------------------------------------------
    def _other(self, other):
        if isinstance(other, MultiPolynomial):
            if other.ring != self.ring:
                if other.ring.field != self.ring.field:
                    raise FieldMismatch(f"{self.ring.field!r} vs {other.ring.field!r}")
                raise DimensionMismatch(f"{self.ring.names} vs {other.ring.names}")
            return other
        if isinstance(other, (int, Fraction, GF, ExtElement)):
            return self.ring.constant(other)
        return None

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return MultiPolynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if len(o.terms) == 1 and len(self.terms) > 1:
            self, o = o, self
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return MultiPolynomial(self.ring, {e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, MultiPolynomial):
            return exact_div(self, other)
        c = self.ring.field.convert(other)
        inv = self.ring.field.one / c
        return self * inv

    def __eq__(self, other):
        o = self._other(other) if isinstance(other, (MultiPolynomial, int, Fraction, GF, ExtElement)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -----------------------------------------------------
    @property
    def is_zero(self):
        return not self.terms

    @property
    def field(self):
        return self.ring.field

    def sorted_terms(self):
        """Terms in canonical (descending lexicographic) order."""
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def order(self):
        """Lowest total degree of a term; ``inf`` for zero."""
        if not self.terms:
            return float("inf")
        return min(sum(e) for e in self.terms)

    def homogeneous_component(self, d):
        return MultiPolynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def initial_form(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no initial form")
        return self.homogeneous_component(self.order())

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def coeff(self, e):
        return self.terms.get(tuple(e), self.ring.field.zero)

    def truncate(self, d):
        """Drop the terms of total degree ``>= d``."""
        return MultiPolynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) < d})

    def variables(self):
        return [i for i in range(self.ring.nvars) if any(e[i] for e in self.terms)]

    # -- transformations ------------------------------------------------
    def convert(self, ring):
        """Reinterpret in ``ring`` (same variable count, coefficients coerced)."""
        if ring == self.ring:
            return self
        if ring.nvars != self.ring.nvars:
            raise DimensionMismatch("variable counts differ")
        K = ring.field
        if isinstance(K, type(self.ring.field)) or not hasattr(K, "base"):
            conv = K.convert
        else:
            conv = K.convert
        return MultiPolynomial(ring, {e: conv(c) for e, c in self.terms.items()})

    def evaluate(self, point):
        K = self.ring.field
        acc = K.zero
        for e, c in self.terms.items():
            t = c
            for xi, ei in zip(point, e):
                if ei:
                    t = t * xi**ei
            acc = acc + t
        return acc

    def partial(self, i):
        terms = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                v = c * e[i]
                if v != 0:
                    terms[ne] = v
        return MultiPolynomial(self.ring, terms)

    def monic(self):
        if not self.terms:
            return self
        return self / self.leading_term()[1]

    def __repr__(self):
        return self.to_str()

    def to_str(self):
        if not self.terms:
            return "0"
        K = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.ring.names, e) if k
            )
            cs = K.format(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self, with_ring=True):
        K = self.ring.field
        terms = [{"c": K.format(c), "e": list(e)} for e, c in self.sorted_terms()]
        if not with_ring:
            return terms
        out = self.ring.to_json()
        out["terms"] = terms
        return out


# -- ring-level operations ----------------------------------------------

def substitute(f, mapping, target=None):
    """Compose ``f`` with ``mapping`` (variable index or name -> polynomial).

    Every variable of ``f`` must be mapped; the images share one ring.
    """
    names = f.ring.names
    images = [None] * f.ring.nvars
    for key, val in mapping.items():
        idx = names.index(key) if isinstance(key, str) else key
        images[idx] = val
    for i in f.variables():
        if images[i] is None:
            raise DimensionMismatch(f"variable {names[i]} is not mapped")
    if target is None:
        target = next(v.ring for v in images if v is not None)
    images = [target(v) if v is not None else None for v in images]
    if f.ring.field != target.field:
        f = f.convert(f.ring.with_field(target.field))
    powers = [dict() for _ in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = images[i] ** k
        return cache[k]

    acc = target.zero
    for e, c in f.terms.items():
        t = target.constant(c)
        for i, k in enumerate(e):
            if k:
                t = t * power(i, k)
        acc = acc + t
    return acc


def exact_div(f, g):
    """Quotient of an exact division; raises ``ValueError`` if not exact."""
    q, r = divmod_lex(f, g)
    if r:
        raise ValueError("division is not exact")
    return q


def divmod_lex(f, g):
    """Multivariate division by a single divisor using lex leading terms."""
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    ge, gc = g.leading_term()
    ginv = g.ring.field.one / gc
    q, r = {}, {}
    rest = f
    while rest.terms:
        e, c = rest.leading_term()
        if all(a >= b for a, b in zip(e, ge)):
            m = tuple(a - b for a, b in zip(e, ge))
            coef = c * ginv
            q[m] = coef
            rest = rest - MultiPolynomial(f.ring, {m: coef}) * g
        else:
            r[e] = c
            rest = MultiPolynomial(f.ring, {k: v for k, v in rest.terms.items() if k != e})
    return MultiPolynomial(f.ring, q), MultiPolynomial(f.ring, r)


def divides(g, f):
    try:
        exact_div(f, g)
        return True
    except ValueError:
        return False


def _split_last(f, sub):
    """View ``f`` as a polynomial in its last variable over ``sub``."""
    out = {}
    for e, c in f.terms.items():
        out.setdefault(e[-1], {})[e[:-1]] = c
    return {k: MultiPolynomial(sub, v) for k, v in out.items()}


def _join_last(coeffs, ring):
    terms = {}
    for k, p in coeffs.items():
        for e, c in p.terms.items():
            terms[e + (k,)] = c
    return MultiPolynomial(ring, terms)


def _content(f, sub):
    g = None
    for c in _split_last(f, sub).values():
        g = c if g is None else gcd(g, c)
        if g.degree() == 0:
            return sub.one
    return g if g is not None else sub.zero


def _prem(a, b, ring):
    """Pseudo-remainder of ``a`` by ``b`` in the last variable."""
    n = ring.nvars - 1
    db = b.degree(n)
    lc_b = _join_last({0: _split_last(b, ring.with_names(ring.names[:-1]))[db]}, ring)
    r = a
    while r.terms and r.degree(n) >= db:
        dr = r.degree(n)
        sub = ring.with_names(ring.names[:-1])
        lc_r = _join_last({0: _split_last(r, sub)[dr]}, ring)
        shift = ring.monomial(tuple(0 for _ in range(n)) + (dr - db,))
        r = lc_b * r - lc_r * shift * b
    return r


def gcd(f, g):
    """Greatest common divisor, normalized to be monic (lex leading term).

    Recursive primitive polynomial remainder sequence in the last variable.
    """
    ring = f.ring
    if g.ring != ring:
        raise FieldMismatch("gcd of polynomials from different rings")
    if not f.terms:
        return g.monic()
    if not g.terms:
        return f.monic()
    if ring.nvars == 0 or (f.degree() == 0 or g.degree() == 0):
        if ring.nvars == 0 or f.degree() == 0 or g.degree() == 0:
            return ring.one
    n = ring.nvars - 1
    sub = ring.with_names(ring.names[:-1])
    cf, cg = _content(f, sub), _content(g, sub)
    c = gcd(cf, cg) if sub.nvars else sub.one
    a = exact_div(f, _join_last({0: cf}, ring))
    b = exact_div(g, _join_last({0: cg}, ring))
    if a.degree(n) < b.degree(n):
        a, b = b, a
    while b.terms and b.degree(n) > 0:
        r = _prem(a, b, ring)
        if not r.terms:
            a = b
            b = ring.zero
            break
        r = exact_div(r, _join_last({0: _content(r, sub)}, ring))
        a, b = b, r
    if b.terms:
        # b has degree 0 in the main variable: primitive parts are coprime
        result = ring.one
    else:
        result = a if a.degree(n) > 0 else ring.one
    return (_join_last({0: c}, ring) * result).monic()


def squarefree_radical(f):
    """Product of the distinct irreducible factors of ``f`` (up to a unit)."""
    ring = f.ring
    if f.degree() <= 0:
        return ring.one
    parts = [f.partial(i) for i in range(ring.nvars)]
    if all(not d for d in parts):
        # f is a p-th power in characteristic p
        return squarefree_radical(_pth_root(f))
    g = f
    for d in parts:
        if d:
            g = gcd(g, d)
    r1 = exact_div(f, g)
    if g.degree() <= 0:
        return r1.monic()
    rg = squarefree_radical(g)
    common = gcd(r1, rg)
    return exact_div(r1 * rg, common).monic()


def _pth_root(f):
    K = f.ring.field
    p = K.characteristic
    q = getattr(K, "order", p)
    terms = {}
    for e, c in f.terms.items():
        # x -> x^(q/p) is the inverse Frobenius on a field of order q
        terms[tuple(k // p for k in e)] = c ** (q // p)
    return MultiPolynomial(f.ring, terms)


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\*\*|[-+*/^()−]))")


def parse_expr(text, ring):
    """Parse an expression like ``"y^2 - 3/2*x^3"`` into ``ring``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("expr", f"unexpected character at {pos}: {text[pos:]!r}")
        pos = m.end()
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", "-" if op == "−" else ("^" if op == "**" else op)))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i]

    def take():
        nonlocal i
        tok = tokens[i]
        i += 1
        return tok

    def expr():
        node = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = unary()
        while peek() in (("op", "*"), ("op", "/")) or peek()[0] in ("num", "name") or peek() == ("op", "("):
            if peek() in (("op", "*"), ("op", "/")):
                op = take()[1]
            else:
                op = "*"
            rhs = unary()
            if op == "*":
                node = node * rhs
            else:
                if rhs.degree() > 0:
                    raise ParseError("expr", "division by a non-constant")
                node = node / rhs.constant_term()
        return node

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            tok = take()
            if tok[0] != "num":
                raise ParseError("expr", "exponent must be a nonnegative integer")
            return base ** tok[1]
        return base

    def atom():
        kind, val = take()
        if kind == "num":
            return ring.constant(val)
        if kind == "name":
            if val not in ring.names:
                raise ParseError("expr", f"unknown variable {val!r}")
            return ring.gens[ring.names.index(val)]
        if (kind, val) == ("op", "("):
            node = expr()
            if take() != ("op", ")"):
                raise ParseError("expr", "unbalanced parentheses")
            return node
        raise ParseError("expr", f"unexpected token {val!r}")

    result = expr()
    if peek()[0] != "end":
        raise ParseError("expr", f"trailing input near token {peek()[1]!r}")
    return result


def ring_from_json(obj, default_vars=None):
    if not isinstance(obj, dict):
        raise ParseError("poly", "expected an object")
    names = obj.get("vars", default_vars)
    if names is None:
        raise ParseError("vars", "required")
    if not isinstance(names, list) or not names or not all(isinstance(n, str) for n in names):
        raise ParseError("vars", "must be a nonempty list of names")
    return PolyRing(field_from_json(obj.get("field")), names)


def poly_from_json(obj, ring=None):
    """Read the repo-wide polynomial literal (``terms`` or ``expr``)."""
    if ring is None or "vars" in obj:
        ring = ring_from_json(obj, default_vars=None if ring is None else list(ring.names))
    if "expr" in obj:
        if not isinstance(obj["expr"], str):
            raise ParseError("expr", "must be a string")
        return parse_expr(obj["expr"], ring)
    if "terms" not in obj:
        raise ParseError("terms", "required")
    terms = []
    for t in obj["terms"]:
        if not isinstance(t, dict) or "c" not in t or "e" not in t:
            raise ParseError("terms", "each term needs 'c' and 'e'")
        e = t["e"]
        if len(e) != ring.nvars or any(not isinstance(k, int) or k < 0 for k in e):
            raise ParseError("e", f"bad exponent vector {e}")
        terms.append((tuple(e), ring.field.convert(str(t["c"]))))
    return ring.from_terms(terms)
