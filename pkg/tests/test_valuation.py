import pytest

from dicritical.core.field import QQ, SimpleExtension
from dicritical.core.laurent import AuxLaurent
from dicritical.core.poly import poly_ring
from dicritical.errors import BadParameters, DimensionMismatch, InvalidReesElement, ParseError, ZeroElement
from dicritical.monomial import MonomialIdeal
from dicritical.valuation import (
    INFINITY,
    DivisorialValuation,
    MonomialValuation,
    ReesElement,
    gauss_eval,
    ideal_value,
    qdt_eval,
    rees_ext_eval,
    staircase,
    valuation_from_json,
    value_to_json,
)


def test_mono_value_examples(Rxy):
    R, x, y = Rxy
    assert MonomialValuation([1, 1])(x + y**2) == 1
    assert MonomialValuation([3, 2])(y**3) == 6
    assert MonomialValuation([1, 1])(R.zero) == INFINITY
    assert value_to_json(INFINITY) == "inf"


def test_mono_value_dimension_mismatch(Rxy):
    _, x, _ = Rxy
    with pytest.raises(DimensionMismatch):
        MonomialValuation([1, 2, 3])(x)


@pytest.mark.parametrize("w", [[2, 4], [0, 1], [-1, 2], []])
def test_weights_must_be_positive_and_primitive(w):
    with pytest.raises(BadParameters):
        MonomialValuation(w)


def test_ideal_value_examples(Rxy):
    R, x, y = Rxy
    assert ideal_value(MonomialValuation([3, 2]), [x**2, y**3]) == 6
    assert ideal_value(MonomialValuation([1, 1]), [x, y]) == 1
    assert ideal_value(MonomialValuation([1, 1]), [R.zero]) == INFINITY


def test_gauss_eval_examples(Rxy):
    R, x, y = Rxy
    v = MonomialValuation([1, 1])
    assert gauss_eval(v, AuxLaurent(R, {-1: x, 0: y**2})) == 1
    assert gauss_eval(v, AuxLaurent(R, {})) == INFINITY
    assert gauss_eval(v, AuxLaurent(R, {5: R.one})) == 0


def test_rees_ext_eval_examples(Rxy):
    R, x, y = Rxy
    I = MonomialIdeal([(2, 0), (0, 3)])
    v = MonomialValuation([3, 2])
    VI = ideal_value(v, I.polys())
    assert VI == 6
    assert rees_ext_eval(v, VI, ReesElement(R, {1: y**3, 2: x**4}, I)) == 0
    assert rees_ext_eval(v, VI, ReesElement(R, {1: x**2}, I)) == 0
    # x is not in I, so x*Z is not a Rees element of I
    with pytest.raises(InvalidReesElement):
        ReesElement(R, {1: x}, I)
    with pytest.raises(ZeroElement):
        rees_ext_eval(v, VI, ReesElement(R, {}))
    with pytest.raises(InvalidReesElement):
        ReesElement(R, {-1: x})


def test_qdt_eval_examples(Rxy):
    R, x, y = Rxy
    origin = DivisorialValuation([(0, 0)])
    assert qdt_eval(origin, y) == 1
    V12 = DivisorialValuation([(0, 0), (0, 0)])
    assert V12.weights() == (1, 2)
    assert qdt_eval(V12, y**2 - x**3) == 3
    V23 = staircase((2, 3))
    assert V23(y**2 - x**3) == 6
    assert V23(R.zero) == INFINITY


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 8) for q in range(1, 8) if p + q <= 8 and __import__("math").gcd(p, q) == 1])
def test_staircase_matches_monomial_valuation(p, q):
    R, (x, y) = poly_ring(["x", "y"])
    V = staircase((p, q))
    w = MonomialValuation([p, q])
    assert V.weights() == (p, q)
    for f in [x, y, x * y, y**2 - x**3, x**5 + y**4 + x * y**2, (x + y) ** 3, x**2 * y - y**3 + x**7]:
        assert V(f) == w(f)


def test_chart_independence_at_coordinate_points(Rxy):
    """At a point of the first exceptional line reached by both charts, both routes agree."""
    R, x, y = Rxy
    # the point t = 1 on E1: chart 0 center 1 is the same point as chart 1 center 1
    A = DivisorialValuation([(0, 0), (0, 1)])
    B = DivisorialValuation([(0, 0), (1, 1)])
    for f in [y - x, (y - x) ** 2 + x**3, x * y, y**2 - x**2 + x**3]:
        assert A(f) == B(f)


def test_divisorial_over_extension(Rxy):
    R, x, y = Rxy
    K = SimpleExtension(QQ, [1, 0, 1])
    V = DivisorialValuation([(0, 0), (0, K.generator)], K)
    assert V(x**2 + y**2) == 3
    assert V(x) == 1
    assert V.weights() is None


def test_valuation_json():
    v = valuation_from_json({"type": "monomial", "w": [2, 3]})
    assert v == MonomialValuation([2, 3])
    V = valuation_from_json({"type": "qdt", "steps": [{"chart": 0, "center": "0"}, {"chart": 0, "center": "0"}]})
    assert V.weights() == (1, 2)
    assert V.to_json()["weights"] == [1, 2]
    with pytest.raises(ParseError):
        valuation_from_json({"type": "monomial", "w": [2, 4]})
    with pytest.raises(ParseError):
        valuation_from_json({"type": "other"})
    K = {"type": "Q", "minpoly": ["1", "0", "1"]}
    W = valuation_from_json({"type": "qdt", "field": K, "steps": [{"chart": 0, "center": "0"}, {"chart": 0, "center": "a"}]})
    assert W.field.degree == 2
