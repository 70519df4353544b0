import pytest

from dicritical.core.field import GFp
from dicritical.core.poly import poly_ring


@pytest.fixture
def Rxy():
    R, (x, y) = poly_ring(["x", "y"])
    return R, x, y


@pytest.fixture
def F2xy():
    R, (x, y) = poly_ring(["x", "y"], GFp(2))
    return R, x, y
