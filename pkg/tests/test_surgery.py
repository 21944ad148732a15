from math import gcd

import pytest
from hypothesis import given, strategies as st

from skeintwist.surgery import (
    SlopeError,
    homology_order,
    hopf_homology_order,
    hopf_s3_test,
    shared_slopes,
)


def test_hopf_examples():
    assert hopf_s3_test(2, 1, 1, 1)
    assert not hopf_s3_test(2, 1, 2, 1)
    assert hopf_homology_order(0, 1, 0, 1) == 1
    assert hopf_homology_order(1, 0, 1, 0) == 1
    assert hopf_homology_order(1, 1, 1, 1) == 0


def test_hopf_rejects_bad_slopes():
    with pytest.raises(SlopeError):
        hopf_s3_test(0, 0, 1, 1)
    with pytest.raises(SlopeError):
        hopf_s3_test(2, 4, 1, 1)


def test_hopf_truth_table():
    pairs = [(p, q) for p in range(-5, 6) for q in range(-5, 6) if (p, q) != (0, 0) and gcd(p, q) == 1]
    for p, q in pairs:
        for r, s in pairs:
            assert hopf_s3_test(p, q, r, s) == (abs(p * r - q * s) == 1)


@pytest.mark.parametrize(
    "n, lk, want",
    [(2, -1, (3, 4, 5, 6)), (0, 1, (-3, -2, -1, -2)), (-4, -1, (-3, -2, -1, -6))],
)
def test_shared_slopes_examples(n, lk, want):
    assert shared_slopes(n, lk) == want


@pytest.mark.parametrize("n", range(-5, 6))
def test_shared_slopes_formula(n):
    assert shared_slopes(n, -1) == (n + 1, n + 2, n + 3, 2 * n + 2)
    assert shared_slopes(n, 1) == (n - 3, n - 2, n - 1, 2 * n - 2)


def test_shared_slopes_bad_linking():
    with pytest.raises(ValueError):
        shared_slopes(1, 0)


def test_homology_order_examples():
    assert homology_order([]) == 1
    assert homology_order([[2, 1], [1, 1]]) == 1
    assert homology_order([[0, 1], [1, 0]]) == 1
    assert homology_order([[0, 0], [0, 3]]) == 0
    with pytest.raises(ValueError):
        homology_order([[1, 2]])
    with pytest.raises(ValueError):
        homology_order([[1.5]])
    with pytest.raises(ValueError):
        homology_order([[True]])


def _det(m):
    # Laplace expansion: an independent exact determinant.
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(len(m)))


@given(st.integers(1, 5).flatmap(
    lambda k: st.lists(st.lists(st.integers(-9, 9), min_size=k, max_size=k), min_size=k, max_size=k)
))
def test_homology_order_is_abs_det(m):
    assert homology_order(m) == abs(_det(m))


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_hopf_matches_linking_matrix(p, r):
    assert hopf_homology_order(p, 1, r, 1) == homology_order([[p, 1], [1, r]])
