from fractions import Fraction
import time

import pytest
from hypothesis import given, strategies as st

from quadsub.bounds import (BoundTable, C_lower, C_upper, admissible, asymptotic_report,
                            bound_B, bound_B_unmemoized, bound_C, bound_C0, envelope,
                            format_report, theta)


def test_hand_values():
    # B(0,2,1) = 1*(8+4+2+1) + 1*3 + B(4,2,0) = 15 + 3 + 12
    assert bound_B(0, 2, 1) == 30
    assert bound_B(1, 1, 0) == 2
    assert bound_C(2) == 31
    assert bound_C0(2) == 31
    assert bound_C(1) == 0 and bound_C0(1) == 0


def test_argument_checks():
    with pytest.raises(ValueError):
        bound_B(0, 1, 2)
    with pytest.raises(ValueError):
        bound_B(-1, 1, 0)
    with pytest.raises(ValueError):
        bound_C(0)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_memoized_matches_iterative(m, n, h):
    if h > n:
        return
    assert bound_B(m, n, h) == bound_B_unmemoized(m, n, h)


def test_admissible_triples():
    assert sorted(admissible(2)) == [(0, 2, 0), (0, 2, 1), (1, 1, 0)]


@pytest.mark.parametrize("m", range(7))
def test_envelope_sandwich(m):
    for n in range(7):
        for h in range(n + 1):
            lo, hi = envelope(m, n, h)
            assert lo <= bound_B(m, n, h) <= hi
            if h == 0:
                assert lo == hi == bound_B(m, n, 0)


def test_theta():
    assert theta(0, 4) == 0
    assert theta(3, 4) == 1 + 4 + 16
    assert theta(3, 1) == 3


def test_C_envelopes():
    for s in range(1, 7):
        assert C_lower(s) <= bound_C(s) <= C_upper(s)


def test_C_is_maximum_over_admissible():
    for s in range(1, 7):
        values = [bound_B(m, n, h) + h for m, n, h in admissible(s)]
        assert bound_C(s) == max(values)
        assert bound_C0(s) <= bound_C(s)


def test_report_is_exact_and_fast():
    t = time.perf_counter()
    rows = asymptotic_report(6)
    text = format_report(rows)
    assert time.perf_counter() - t < 1.0
    assert [r.s for r in rows] == list(range(1, 7))
    assert rows[1].ratio_C == Fraction(31, 32)
    assert all(r.model == 2 * r.s ** (2 * r.s) for r in rows)
    assert rows[2].C == 1538
    assert text.splitlines()[0].startswith("s\t")
    with pytest.raises(ValueError):
        asymptotic_report(9)


def test_ratio_approaches_one():
    rows = asymptotic_report(8)
    tail = [r.ratio_C for r in rows[3:]]
    assert all(abs(r - 1) < Fraction(1, 20) for r in tail)


def test_bound_table_memoizes():
    t = BoundTable()
    assert t.B(0, 2, 1) == 30 and (0, 2, 1) in t.memo
    assert t.C(2) == 31 and t.C0(2) == 31
