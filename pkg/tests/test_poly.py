from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadsub.field import Field, is_prime
from quadsub.poly import GREVLEX, LEX, Polynomial, block_order, variables
from conftest import F5, F7, GF, QQ, poly


def test_prime_check():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(32003)
    with pytest.raises(ValueError):
        Field(32001)


def test_field_coercion():
    assert F7(-1) == 6
    assert F7(Fraction(1, 2)) == 4
    assert QQ(3) == Fraction(3)
    assert F7.inv(3) * 3 % 7 == 1
    with pytest.raises(ZeroDivisionError):
        F7.inv(0)


def test_product_over_f5():
    x = Polynomial.variable(0, 1, F5)
    assert x.scale(2) * x.scale(3) == x * x     # 6 = 1 in F_5


def test_characteristic_kills_terms():
    x, y = variables(2, F7)
    assert (x + y) ** 7 == x ** 7 + y ** 7


def test_degree_and_homogeneity():
    f = poly("x^2 + y + 1")
    assert f.degree() == 2
    assert not f.is_homogeneous()
    assert f.homogeneous_part(2) == poly("x^2")
    assert f.homogeneous_part(1) == poly("y")
    assert Polynomial.zero(3).degree() == -1


def test_grevlex_and_lex_orders():
    # x > y > z; grevlex ranks y^2 above x*z, lex does the opposite
    y2, xz = (0, 2, 0), (1, 0, 1)
    assert GREVLEX.key(y2) > GREVLEX.key(xz)
    assert LEX.key(xz) > LEX.key(y2)
    assert GREVLEX.key((0, 0, 3)) > GREVLEX.key((1, 1, 0))   # degree first


def test_block_order_eliminates_front():
    order = block_order([0])
    # anything with x beats anything without it
    assert order.key((1, 0, 0)) > order.key((0, 5, 5))
    assert order.key((0, 2, 0)) > order.key((0, 1, 0))


def test_to_str():
    assert poly("2*x^2 - y*z + 3").to_str(["x", "y", "z"]) == "2*x^2 - y*z + 3"
    assert poly("-x").to_str() == "-x1"
    assert Polynomial.zero(2).to_str() == "0"


def test_compose_and_restrict():
    f = poly("x*y + z^2")
    g = f.compose([poly("y"), poly("x"), poly("x + y")])
    assert g == poly("x*y + x^2 + 2*x*y + y^2")
    assert f.restrict([0, 1]) == Polynomial({(1, 1): 1}, 2)
    assert f.kill([2]) == poly("x*y")
    e = Polynomial({(1, 1): 1}, 2).embed([0, 2], 3)
    assert e == poly("x*z")


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        Polynomial.variable(0, 1, F5) + Polynomial.variable(0, 1, F7)


def test_monic():
    assert poly("3*x^2 + 6*y^2").monic() == poly("x^2 + 2*y^2")


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-6, 6), max_size=5)


@settings(max_examples=80, deadline=None)
@given(small, small, small)
def test_ring_axioms(a, b, c):
    a, b, c = (Polynomial(t, 3, F7) for t in (a, b, c))
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == Polynomial.zero(3, F7)
    if a and b:
        assert (a * b).degree() == a.degree() + b.degree()   # F_7 is a domain


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_compose_is_ring_homomorphism(a, b):
    a, b = Polynomial(a, 3, F7), Polynomial(b, 3, F7)
    imgs = [Polynomial({(1, 0, 0): 1, (0, 0, 1): 2}, 3, F7),
            Polynomial({(0, 2, 0): 1}, 3, F7), Polynomial({(0, 0, 0): 3}, 3, F7)]
    assert (a * b).compose(imgs) == a.compose(imgs) * b.compose(imgs)
    assert (a + b).compose(imgs) == a.compose(imgs) + b.compose(imgs)
