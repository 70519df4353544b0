import pytest

from dicritical.cluster import match_valuations
from dicritical.constructions import (
    construct_b,
    construct_pencil_with_dicriticals,
    construct_special_reduction,
    jacobian_demo,
    normal_sing_dicriticals,
    verify_reduction_2d,
)
from dicritical.core.field import GFp
from dicritical.core.poly import poly_ring
from dicritical.errors import BadParameters, NonRationalPoint, PreconditionFailed
from dicritical.pencil import Pencil, principalize
from dicritical.valuation import staircase


@pytest.fixture
def xy():
    _, (x, y) = poly_ring(["x", "y"])
    return x, y


V11, V12, V23 = staircase((1, 1)), staircase((1, 2)), staircase((2, 3))


def test_construct_b_examples(xy):
    x, y = xy
    assert construct_b([V11], [1]) == (1, x)
    assert construct_b([V23], [1]) == (1, y**2)
    s, b = construct_b([V11, V12], [1, 1])
    assert s == 1 and (V11(b), V12(b)) == (2, 3)


def test_special_reduction_examples(xy):
    x, y = xy
    assert construct_special_reduction([V23], [1], y, 2) == (1, x**3)
    t, a = construct_special_reduction([V11], [1], x, 1)
    assert t == 1 and a.degree() == 1 and verify_reduction_2d(Pencil(a, x), [V11], [1])
    with pytest.raises(PreconditionFailed):
        construct_special_reduction([V23], [1], x, 2)


def test_verify_reduction_examples(xy):
    x, y = xy
    assert verify_reduction_2d(Pencil(x**3, y**2), [V23], [1], 1)
    assert verify_reduction_2d(Pencil(x**2, y**2), [V11], [2], 1)
    assert not verify_reduction_2d(Pencil(x**3, y**3), [V11], [2], 1)
    with pytest.raises(PreconditionFailed):
        verify_reduction_2d(Pencil(x + 1, y), [V11], [1])


def test_normal_singularity_examples():
    out = normal_sing_dicriticals(3, ["X", "Y"])
    assert out["count"] == 2
    assert out["prime_generators"] == [["z", "x'"], ["z", "y'"]]
    assert out["relation_ok"]
    assert normal_sing_dicriticals(5, ["X", "Y", "X+Y"])["count"] == 3
    with pytest.raises(BadParameters):
        normal_sing_dicriticals(2, ["X", "Y"])
    with pytest.raises(BadParameters):
        normal_sing_dicriticals(4, ["X", "2X"])
    with pytest.raises(BadParameters):
        normal_sing_dicriticals(3, ["X", "Y"], field=GFp(3))
    with pytest.raises(BadParameters):
        normal_sing_dicriticals(3, ["X^2", "Y"])


@pytest.mark.parametrize("m,forms", [(3, ["X", "Y"]), (5, ["X", "Y", "X+Y"]), (4, ["X", "Y", "X-Y"]), (7, ["X", "Y", "X+Y", "X+2Y"])])
def test_normal_singularity_counts(m, forms):
    out = normal_sing_dicriticals(m, forms)
    assert out["count"] == len(forms) and out["relation_ok"]


@pytest.mark.parametrize("weights", [[(1, 1)], [(2, 3)], [(1, 1), (1, 2)], [(1, 2), (2, 1)], [(3, 4)]])
def test_realize_round_trip(weights):
    U = [staircase(w) for w in weights]
    p = construct_pencil_with_dicriticals(U)
    assert match_valuations(principalize(p).valuations(), U)


def test_realize_examples(xy):
    x, y = xy
    p = construct_pencil_with_dicriticals([V11])
    assert p.a.degree() == p.b.degree() == 1
    p = construct_pencil_with_dicriticals([V23])
    assert {p.a, p.b} == {x**3, y**2}


def test_jacobian_demo_examples():
    R, (X, Y) = poly_ring(["X", "Y"])
    out = jacobian_demo(X)
    assert len(out["points"]) == 1
    recs = out["points"][0]["report"].dicriticals
    assert [r.kind for r in recs] == ["sharp"]
    out = jacobian_demo(X * Y)
    assert len(out["points"]) == 2
    assert all(len(p["report"].dicriticals) == 1 for p in out["points"])
    out = jacobian_demo(X + X**2 * Y)
    kinds = [r.kind for p in out["points"] for r in p["report"].dicriticals]
    assert kinds and set(kinds) <= {"sharp", "flat"}
    assert all(p["report"].special for p in out["points"])


def test_jacobian_demo_points_at_infinity_need_extension():
    R, (X, Y) = poly_ring(["X", "Y"])
    out = jacobian_demo(X**2 + Y**2 + X)
    assert out["points"][0]["field"]["minpoly"] == ["1", "0", "1"]
    with pytest.raises(NonRationalPoint):
        jacobian_demo(X**2 + Y**2 + X, extend="none")
    with pytest.raises(BadParameters):
        jacobian_demo(R.one)
