"""Randomized invariants checked with hypothesis."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from dicritical.core import upoly
from dicritical.core.field import QQ, GFp
from dicritical.core.poly import PolyRing, substitute
from dicritical.core.roots import roots
from dicritical.monomial import MonomialIdeal, integral_closure, rees_graded_membership
from dicritical.valuation import DivisorialValuation, MonomialValuation, ReesElement, gauss_eval, staircase
from dicritical.core.laurent import AuxLaurent

PROFILE = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
QXY = PolyRing(QQ, ("x", "y"))
F5XY = PolyRing(GFp(5), ("x", "y"))


def polys(ring, max_exp=4, max_terms=4):
    term = st.tuples(
        st.tuples(*[st.integers(0, max_exp)] * ring.nvars),
        st.integers(-6, 6),
    )
    return st.lists(term, max_size=max_terms).map(
        lambda ts: ring.from_terms([(e, ring.field.convert(c)) for e, c in ts])
    )


def nonzero(strategy):
    return strategy.filter(lambda f: not f.is_zero)


@PROFILE
@given(polys(QXY), polys(QXY), polys(QXY))
def test_ring_axioms_over_q(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + g == g + f


@PROFILE
@given(polys(F5XY), polys(F5XY))
def test_frobenius_is_additive(f, g):
    assert (f + g) ** 5 == f**5 + g**5


@PROFILE
@given(polys(QXY, 3), polys(QXY, 3), polys(QXY, 2, 3), polys(QXY, 2, 3))
def test_substitute_is_a_ring_homomorphism(f, g, p, q):
    m = {0: p, 1: q}
    assert substitute(f * g, m) == substitute(f, m) * substitute(g, m)
    assert substitute(f + g, m) == substitute(f, m) + substitute(g, m)


@PROFILE
@given(st.sampled_from([QQ, GFp(2), GFp(7)]), st.lists(st.integers(-4, 4), min_size=2, max_size=6))
def test_roots_reassemble_the_input(K, coeffs):
    f = upoly.trim([K.convert(c) for c in coeffs])
    if upoly.degree(f) < 1:
        return
    found, residual = roots(K, f)
    acc = residual
    for r, m in found:
        for _ in range(m):
            acc = upoly.mul(K, acc, [-r, K.one])
    assert acc == upoly.monic(K, f)
    assert all(upoly.evaluate(K, residual, r) != 0 for r in (K.elements() if K.is_finite else []))


weights2 = st.tuples(st.integers(1, 6), st.integers(1, 6)).filter(lambda w: __import__("math").gcd(*w) == 1)


@PROFILE
@given(weights2, nonzero(polys(QXY)), nonzero(polys(QXY)))
def test_monomial_valuation_axioms(w, f, g):
    v = MonomialValuation(w)
    assert v(f * g) == v(f) + v(g)
    assert v(f + g) >= min(v(f), v(g))
    assert v(QXY.constant(QQ.convert(7))) == 0


chains = st.lists(st.tuples(st.integers(0, 1), st.integers(-2, 2)), min_size=0, max_size=4).map(
    lambda steps: DivisorialValuation([(0, 0)] + steps)
)


@PROFILE
@given(chains, nonzero(polys(QXY, 3)), nonzero(polys(QXY, 3)))
def test_divisorial_valuation_axioms(V, f, g):
    assert V(f * g) == V(f) + V(g)
    assert V(f + g) >= min(V(f), V(g))
    assert V(QXY.constant(QQ.convert(-3))) == 0


@PROFILE
@given(weights2, nonzero(polys(QXY, 4, 5)))
def test_staircase_agrees_with_monomial_valuation(w, f):
    assert staircase(w)(f) == MonomialValuation(w)(f)


@PROFILE
@given(weights2, st.dictionaries(st.integers(-3, 3), nonzero(polys(QXY)), max_size=4),
       st.dictionaries(st.integers(-3, 3), nonzero(polys(QXY)), max_size=4))
def test_gauss_extension_axioms(w, a, b):
    v = MonomialValuation(w)
    F, G = AuxLaurent(QXY, a), AuxLaurent(QXY, b)
    assert gauss_eval(v, F * G) == gauss_eval(v, F) + gauss_eval(v, G)
    assert gauss_eval(v, F + G) >= min(gauss_eval(v, F), gauss_eval(v, G))


def ideals(d, max_exp):
    vec = st.tuples(*[st.integers(0, max_exp)] * d).filter(any)
    return st.lists(vec, min_size=1, max_size=4).map(MonomialIdeal)


def _subset(I, J):
    return all(I.contains_monomial(g) for g in J.gens)


@PROFILE
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(ideals(d, 6 if d < 4 else 3), ideals(d, 6 if d < 4 else 3))))
def test_integral_closure_is_a_closure_operator(pair):
    I, J = pair
    C = integral_closure(I)
    assert _subset(C, I)
    assert integral_closure(C) == C
    S = I.product(J)  # S is contained in I
    assert _subset(C, integral_closure(S))


def m_primary(d, max_exp):
    axes = st.tuples(*[st.integers(1, max_exp)] * d).map(
        lambda a: [tuple(a[i] if j == i else 0 for j in range(d)) for i in range(d)]
    )
    extra = st.lists(st.tuples(*[st.integers(0, max_exp)] * d).filter(any), max_size=3)
    return st.tuples(axes, extra).map(lambda t: MonomialIdeal(t[0] + t[1]))


@PROFILE
@given(st.sampled_from([2, 3]).flatmap(lambda d: m_primary(d, 4)), st.data())
def test_rees_membership_routes_agree(I, data):
    R = I.ring()
    comps = data.draw(st.dictionaries(st.integers(0, 3), nonzero(polys(R, 6, 3)), min_size=1, max_size=3))
    out = rees_graded_membership(ReesElement(R, comps), I)
    assert out["agree"]
