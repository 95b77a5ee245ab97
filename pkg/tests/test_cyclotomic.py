from fractions import Fraction

import pytest

from bisetplus import Cyclotomic, root_of_unity
from bisetplus.cyclotomic import cyclotomic_poly, determinant, rank


def test_phi_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert len(cyclotomic_poly(12)) == 5


def test_zeta4_squared():
    z = root_of_unity(1, 4)
    assert z * z == -1


def test_zeta6_relation():
    z = root_of_unity(1, 6)
    assert z * z - z + 1 == 0


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_root_sum_vanishes(p):
    total = Cyclotomic(p)
    for k in range(p):
        total = total + root_of_unity(k, p)
    assert total == 0


def test_inverse():
    z = root_of_unity(1, 5)
    x = 1 + 2 * z + Fraction(1, 3) * z * z
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        Cyclotomic(5).inverse()


def test_embedding_and_cross_conductor_equality():
    z3 = root_of_unity(1, 3)
    assert z3.embed(6) == root_of_unity(2, 6)
    assert z3 == root_of_unity(2, 6)
    with pytest.raises(ValueError):
        z3 + root_of_unity(1, 4)


def test_rationality_and_text():
    assert Cyclotomic.from_int(4, 3).is_rational()
    assert not root_of_unity(1, 4).is_rational()
    assert Cyclotomic(4).text() == "0"
    assert (1 - root_of_unity(1, 4)).text() == "1 - z"


def test_exact_rank_and_determinant():
    z = root_of_unity(1, 3)
    rows = [[1, 1, 1], [1, z, z * z], [1, z * z, z]]
    assert rank(rows) == 3
    assert determinant([[2, 1], [4, 2]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
