import pytest

from dicritical import corpus
from dicritical.core.field import GFp
from dicritical.core.poly import PolyRing, poly_ring
from dicritical.errors import (
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
from dicritical.monomial import (
    ExtReesElement,
    MonomialIdeal,
    certify_reduction,
    ext_rees_check,
    fiber_hilbert,
    find_element,
    find_element_power,
    find_reduction,
    ideal_from_json,
    integral_closure,
    is_complete,
    is_normal,
    newton_polyhedron,
    rees_graded_membership,
    rees_valuations,
    value_criterion,
    verify_power_decomposition,
)
from dicritical.valuation import ReesElement, ideal_value

M = MonomialIdeal([(1, 0), (0, 1)])
X2Y3 = MonomialIdeal([(2, 0), (0, 3)])
X2XYY3 = MonomialIdeal([(2, 0), (1, 1), (0, 3)])
NON_NORMAL_3 = MonomialIdeal([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])


def facets(I):
    return sorted(f.to_json() for f in newton_polyhedron(I).facets)


def test_minimal_generators():
    I = MonomialIdeal([(2, 0), (3, 1), (0, 3), (2, 2)])
    assert I.gens == ((2, 0), (0, 3))


def test_newton_polyhedron_examples():
    assert facets(X2Y3) == [[[3, 2], 6]]
    assert sorted(newton_polyhedron(X2Y3).vertices) == [(0, 3), (2, 0)]
    for k in range(1, 5):
        assert facets(M.power(k)) == [[[1, 1], k]]
    assert facets(X2XYY3) == [[[1, 1], 2], [[2, 1], 3]]


def test_integral_closure_examples():
    assert integral_closure(X2Y3).gens == MonomialIdeal([(2, 0), (1, 2), (0, 3)]).gens
    assert integral_closure(M) == M
    assert integral_closure(MonomialIdeal([(2, 0), (0, 2)])) == MonomialIdeal([(2, 0), (1, 1), (0, 2)])


def test_is_normal_examples():
    for k in range(1, 4):
        assert is_normal(M.power(k), bound=3)
    assert is_normal(integral_closure(X2Y3))
    assert not is_normal(NON_NORMAL_3, bound=1)
    with pytest.raises(NotMPrimary):
        is_normal(MonomialIdeal([(1, 1)]))


def test_rees_valuations_examples():
    as_list = lambda I: [(list(v.weights), val) for v, val in rees_valuations(I)]
    assert as_list(X2XYY3) == [([1, 1], 2), ([2, 1], 3)]
    assert as_list(M.power(3)) == [([1, 1], 3)]
    assert as_list(integral_closure(X2Y3)) == [([3, 2], 6)]


def test_power_decomposition_examples():
    assert verify_power_decomposition(M.power(2), 0)
    for n in range(3):
        assert verify_power_decomposition(X2XYY3, n)
    assert not all(verify_power_decomposition(NON_NORMAL_3, n, check_normal=False) for n in range(3))
    with pytest.raises(NotNormal):
        verify_power_decomposition(NON_NORMAL_3, 0, bound=1)


def test_rees_graded_membership_examples():
    R, (x, y) = poly_ring(["x", "y"])
    out = rees_graded_membership(ReesElement(R, {2: x**2 * y**3}), X2Y3)
    assert out["per_j"] == [False] and not out["overall"] and out["agree"]
    out = rees_graded_membership(ReesElement(R, {1: x**2}), M)
    assert out["per_j"] == [True] and out["overall"] and out["agree"]
    with pytest.raises(InvalidReesElement):
        rees_graded_membership(ReesElement(R, {}), M)


def test_value_criterion_examples():
    R, (x, y) = poly_ring(["x", "y"])
    assert value_criterion(X2XYY3, x * y, 0) and value_criterion(X2XYY3, x * y, 1)
    assert value_criterion(X2XYY3, x**2, 0) and not value_criterion(X2XYY3, x**2, 1)
    with pytest.raises(ZeroPolynomial):
        value_criterion(X2XYY3, R.zero, 0)
    with pytest.raises(NotInIdeal):
        value_criterion(X2XYY3, x, 0)


def test_fiber_hilbert_examples():
    for n in range(1, 6):
        assert fiber_hilbert(M, n).dim == n + 1
        assert fiber_hilbert(M.power(2), n).dim == 2 * n + 1
    assert fiber_hilbert(integral_closure(X2Y3), 1).dim == 3


def test_find_element_examples():
    R, (x, y) = poly_ring(["x", "y"])
    assert find_element(M) == x
    assert find_element(X2XYY3) == x * y


def test_find_element_needs_a_combination_in_three_variables():
    I = MonomialIdeal([(4, 0, 0), (2, 1, 0), (1, 1, 1), (0, 4, 0), (0, 0, 3)])
    rees = rees_valuations(I)
    assert len(rees) >= 3
    assert not any(all(v.monomial_value(g) == val for v, val in rees) for g in I.gens)
    x = find_element(I, seed=0)
    assert len(x.terms) == 2
    assert all(value_criterion(I, x, j) for j in range(len(rees)))


def test_find_element_power_examples():
    assert find_element_power(X2XYY3, 1)[0] == 1
    s, x = find_element_power(X2XYY3, 1, field=GFp(2))
    assert s == 1 and str(x) == "x*y"
    with pytest.raises(SearchExhausted):
        find_element_power(X2XYY3, 1, s_max=0)


def test_find_element_over_f2_never_needs_a_power():
    """Exhaustive check over GF(2): every corpus ideal has a witness already in I."""
    F2 = GFp(2)
    for I in corpus.all_ideals():
        assert find_element_power(I, 1, field=F2)[0] == 1


def test_find_element_rejects_bad_index():
    from dicritical.errors import BadParameters

    with pytest.raises(BadParameters):
        find_element(M, [3])


def test_certify_reduction_examples():
    R, (x, y) = poly_ring(["x", "y"])
    M2 = M.power(2)
    assert certify_reduction(M2, [x**2, y**2]) == {"n": 1, "dims": [5, 5]}
    assert certify_reduction(M, [x, y])["n"] == 0
    assert certify_reduction(M2, [x**2, x * y]) is None
    with pytest.raises(NotEquigenerated):
        certify_reduction(X2XYY3, [x**2])
    with pytest.raises(NotInIdeal):
        certify_reduction(M2, [x**3])


def test_find_reduction_examples():
    R, (x, y) = poly_ring(["x", "y"])
    out = find_reduction(M.power(2), seed=0)
    assert len(out["J"]) == 2 and out["certificate"]["n"] == 1
    S = PolyRing(R.field, ("x",))
    one = find_reduction(MonomialIdeal([(3,)], ("x",)))
    assert one["J"] == [S.monomial((3,)) * one["J"][0].coeff((3,))]
    assert one["certificate"]["n"] == 0
    seeded = find_reduction(M.power(2), seed=0, x1=x**2)
    assert seeded["J"][0] == x**2 and seeded["certificate"] is not None
    with pytest.raises(InvalidElement):
        find_reduction(M.power(2), x1=x * y + y**3)


def test_find_reduction_over_small_field_uses_powers():
    out = find_reduction(M.power(2), seed=0, field=GFp(3))
    assert out["certificate"] is not None and out["power"] >= 1


def test_ext_rees_examples():
    R, (x, y) = poly_ring(["x", "y"])
    # x^2 sits in I but not in I^2, so x^2 Z is a Rees element outside IE
    rep = ext_rees_check(ExtReesElement(R, {1: x**2}, X2Y3), X2Y3)
    assert rep["z_f_in_ext"] is False and rep["f_in_IE"] is False and rep["equivalent"]
    rep = ext_rees_check(ExtReesElement(R, {0: x**2}, X2Y3), X2Y3)
    assert rep["z_f_in_ext"] and rep["f_in_IE"] and rep["equivalent"]
    rep = ext_rees_check(ExtReesElement(R, {-2: R.one, 1: y**3}, X2Y3), X2Y3)
    assert rep["negative"] == [-2] and rep["nonnegative"] == [1] and rep["split_ok"]
    w = rep["w_zinv"]
    assert w == [{"weights": [3, 2], "w_zinv": 6, "V_I": 6, "ok": True}]
    with pytest.raises(InvalidElement):
        ExtReesElement(R, {1: x}, X2Y3)


def test_ideal_json():
    I = ideal_from_json({"vars": ["x", "y"], "gens": [[2, 0], [1, 1], [0, 3]]})
    assert I == X2XYY3 and I.to_json() == {"vars": ["x", "y"], "gens": [[2, 0], [1, 1], [0, 3]]}
    with pytest.raises(ParseError) as err:
        ideal_from_json({"gens": [[1, 0]]})
    assert (err.value.field, err.value.reason) == ("vars", "required")
    with pytest.raises(ParseError):
        ideal_from_json({"vars": ["x", "y"], "gens": [[1, -1]]})


# -- properties over the corpus ----------------------------------------------------------

@pytest.mark.parametrize("I", corpus.all_ideals(), ids=str)
def test_facet_values_scale_with_powers(I):
    for v, val in rees_valuations(I):
        for q in range(1, 5):
            assert ideal_value(v, I.power(q).polys()) == q * val


def test_one_variable_ideals_have_one_rees_valuation():
    for k in range(1, 6):
        assert len(rees_valuations(MonomialIdeal([(k,)], ("x",)))) == 1


@pytest.mark.parametrize("I", corpus.normal_ideals(), ids=str)
def test_corpus_ideals_are_normal_and_complete(I):
    assert is_complete(I)
    assert is_normal(I, bound=2)


@pytest.mark.parametrize("I", corpus.all_ideals(), ids=str)
def test_fiber_count_grows_like_degree_d_minus_1(I):
    from fractions import Fraction

    counts = {n: fiber_hilbert(I, n).dim for n in range(4, 9)}
    d = I.d
    pts = list(range(4, 4 + d))
    # Lagrange interpolation of degree d-1 through n = 4..3+d, then predict n = 8
    pred = Fraction(0)
    for i, ni in enumerate(pts):
        term = Fraction(counts[ni])
        for j, nj in enumerate(pts):
            if j != i:
                term *= Fraction(8 - nj, ni - nj)
        pred += term
    assert pred == counts[8]


@pytest.mark.parametrize("I", corpus.equigenerated_ideals(), ids=str)
def test_reductions_satisfy_value_conditions_and_powers(I):
    out = find_reduction(I, seed=0)
    J = out["J"]
    h = len(rees_valuations(I))
    assert all(value_criterion(I, x, j) for x in J for j in range(h))
    assert certify_reduction(I.power(2), [x**2 for x in J]) is not None
