import random

import sympy
from hypothesis import given, settings, strategies as st

from quadsub.linalg import (LinearChange, complete_rows, express, inverse, rank, row_reduce,
                            span_basis)
from quadsub.poly import Polynomial
from conftest import F7, GF, QQ, poly


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_matches_sympy_over_q(rows):
    assert rank([[QQ(c) for c in r] for r in rows], QQ) == sympy.Matrix(rows).rank()


def test_rank_mod_p_differs_from_q():
    rows = [[1, 2], [3, 6 + 7]]          # det = 13 - 6 = 7
    assert rank([[QQ(c) for c in r] for r in rows], QQ) == 2
    assert rank([[F7(c) for c in r] for r in rows], F7) == 1


def test_rref_pivots():
    rref, piv = row_reduce([[0, 2, 4], [0, 1, 2], [1, 0, 0]], F7)
    assert piv == [0, 1]
    assert rref[1] == [0, 1, 2]


def test_inverse_round_trip():
    rng = random.Random(1)
    for _ in range(20):
        while True:
            m = [[GF.random_element(rng) for _ in range(4)] for _ in range(4)]
            if rank(m, GF) == 4:
                break
        inv = inverse(m, GF)
        prod = [[sum(m[i][k] * inv[k][j] for k in range(4)) % GF.p for j in range(4)]
                for i in range(4)]
        assert prod == [[int(i == j) for j in range(4)] for i in range(4)]


def test_express_and_complete():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert express([2, 3, 5], basis, F7) == [2, 3]
    assert express([0, 0, 1], basis, F7) is None
    rows, added = complete_rows(basis, 3, F7)
    assert rank(rows, F7) == 3 and len(added) == 1


def test_new_coordinates_sends_form_to_variable():
    rows = [[1, 2, 0], [0, 1, 3], [0, 0, 1]]
    ch = LinearChange.new_coordinates(rows, GF)
    for i, r in enumerate(rows):
        assert ch.apply(Polynomial.linear(r, GF)) == Polynomial.variable(i, 3, GF)


def test_change_round_trip_and_composition():
    m1 = [[1, 2, 0], [0, 1, 0], [5, 0, 1]]
    m2 = [[1, 0, 0], [3, 1, 0], [0, 7, 1]]
    a, b = LinearChange.from_matrix(m1, GF), LinearChange.from_matrix(m2, GF)
    f = poly("x^2 + 3*x*y - z^2 + y")
    assert a.inverse().apply(a.apply(f)) == f
    # composing the substitutions by hand
    direct = f.compose([b.apply(a.apply(Polynomial.variable(i, 3, GF))) for i in range(3)])
    assert a.then(b).apply(f) == direct


def test_span_basis():
    forms = [poly("x + y"), poly("2*x + 2*y"), poly("z")]
    r, ch = span_basis(forms)
    assert r == 2
    for f in forms:
        assert ch.apply(f).support() <= {0, 1}


def test_span_basis_on_block():
    forms = [poly("y - z"), poly("y + z")]
    r, ch = span_basis(forms, block=[1, 2])
    assert r == 2
    assert ch.apply(poly("x")) == poly("x")
