"""Roots and irreducible factors of univariate polynomials.

Dense coefficient lists (constant term first) over the fields of
:mod:`.field`.  Roots over finite fields are found by trying every element;
factoring over Q, F_p and quadratic extensions of Q is delegated to sympy.
"""

from fractions import Fraction

import sympy

from . import upoly
from .field import QQ, SimpleExtension
from ..errors import NonRationalPoint, ZeroPolynomial

EXHAUSTIVE_LIMIT = 200_000

_T = sympy.Symbol("t")


def _strip_root(K, f, r):
    """Divide out ``(t - r)`` as often as possible; return ``(mult, quotient)``."""
    mult = 0
    lin = [-r, K.one]
    while len(f) > 1:
        q, rem = upoly.divmod_(K, f, lin)
        if rem:
            break
        f, mult = q, mult + 1
    return mult, f


def roots(K, f):
    """Return ``(roots, residual)`` with roots as ``(value, multiplicity)``.

    ``residual`` is monic, has no root in ``K`` and the input equals
    ``lc * prod (t - r)^m * residual``.
    """
    f = upoly.trim(f)
    if not f:
        raise ZeroPolynomial("roots of the zero polynomial")
    f = upoly.monic(K, f)
    if K.is_finite and K.order <= EXHAUSTIVE_LIMIT:
        out = []
        for r in K.elements():
            if len(f) <= 1:
                break
            if upoly.evaluate(K, f, r) == 0:
                m, f = _strip_root(K, f, r)
                out.append((r, m))
        return out, f
    out = []
    residual = [K.one]
    for g, m in factor(K, f):
        if len(g) == 2:
            out.append((-g[0], m))
        else:
            for _ in range(m):
                residual = upoly.mul(K, residual, g)
    out.sort(key=lambda rm: _sort_key(K, rm[0]))
    return out, residual


def _sort_key(K, x):
    if K is QQ:
        return (Fraction(x),)
    if not isinstance(K, SimpleExtension):
        return (x.v,)
    return tuple(Fraction(c) for c in K.to_base(x))


def factor(K, f):
    """Monic irreducible factors of ``f`` with multiplicities.

    Supported over Q, prime fields and quadratic extensions of Q.
    """
    f = upoly.monic(K, upoly.trim(f))
    if len(f) <= 1:
        return []
    if isinstance(K, SimpleExtension):
        if K.characteristic:
            raise NonRationalPoint(f"field of order {K.order} is too large for exhaustive root search")
        return _factor_quadratic_ext(K, f)
    if K.characteristic:
        p = K.characteristic
        P = sympy.Poly.from_list([int(c.v) for c in reversed(f)], _T, modulus=p)
        out = []
        for g, m in P.factor_list()[1]:
            out.append((upoly.monic(K, [K.convert(int(c)) for c in reversed(g.rep.to_list())]), m))
        return sorted(out, key=lambda gm: (len(gm[0]), [c.v for c in gm[0]]))
    P = sympy.Poly.from_list([sympy.Rational(c.numerator, c.denominator) for c in reversed(f)], _T, domain=sympy.QQ)
    out = []
    for g, m in P.factor_list()[1]:
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in reversed(g.rep.to_list())]
        out.append((upoly.monic(K, coeffs), m))
    return sorted(out, key=lambda gm: (len(gm[0]), gm[0]))


def _theta(K):
    c0, c1 = (Fraction(c) for c in K.minpoly[:2])
    disc = c1 * c1 - 4 * c0
    return (-sympy.Rational(c1.numerator, c1.denominator) + sympy.sqrt(sympy.Rational(disc.numerator, disc.denominator))) / 2


def _factor_quadratic_ext(K, f):
    dom = sympy.QQ.algebraic_field(_theta(K))

    def to_anp(x):
        c = [Fraction(v) for v in K.to_base(x)]
        return dom([sympy.Rational(v.numerator, v.denominator) for v in reversed(c)])

    def from_anp(a):
        coeffs = [Fraction(int(v.numerator), int(v.denominator)) for v in reversed(a.to_list())]
        return K.convert(coeffs)

    P = sympy.Poly.from_list([to_anp(c) for c in reversed(f)], _T, domain=dom)
    out = []
    for g, m in P.factor_list()[1]:
        out.append((upoly.monic(K, [from_anp(c) for c in reversed(g.rep.to_list())]), m))
    return sorted(out, key=lambda gm: len(gm[0]))


def univariate_roots(p):
    """Roots of a one-variable :class:`MultiPolynomial` in its field.

    Returns ``(roots, residual)`` where ``residual`` is a monic polynomial in
    the same ring without roots in the field.
    """
    from .poly import MultiPolynomial

    ring = p.ring
    if ring.nvars != 1:
        raise ValueError("expected a polynomial ring in one variable")
    if p.is_zero:
        raise ZeroPolynomial("roots of the zero polynomial")
    K = ring.field
    dense = [K.zero] * (p.degree() + 1)
    for (k,), c in p.terms.items():
        dense[k] = c
    found, residual = roots(K, dense)
    res = MultiPolynomial(ring, {(k,): c for k, c in enumerate(residual) if c != 0})
    return found, res
