from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from assocpoly.associahedron import boundary_insert, is_k_point
from assocpoly.degeneracy import d_j, d_k, interpolate_degeneracy, xi
from assocpoly.homeo import d_s
from assocpoly.multiplihedron import HALF, delta_insert, is_j_point

from conftest import F, j_point_of, j_points, k_point_of, k_points, nonneg_vectors


def test_xi_examples():
    assert xi(F(0, 1, 1)) == F(0, 0, 1)
    assert xi(F(0, 0, 0, 0)) == F(0, 0, 0, 0)
    assert xi(F(2, 0)) == F(1, 0)


def test_xi_rejects_negative_and_empty():
    with pytest.raises(ValueError):
        xi(F(1, -1))
    with pytest.raises(ValueError):
        xi(())


def test_degeneracy_examples():
    assert d_k(1, F(0, 1, 1)) == F(0, 1)
    assert d_k(2, F(0, 1, 1)) == F(0, 1)
    assert d_k(1, F(0, 1)) == F(0)
    assert d_j(1, F(0, "3/2")) == F(HALF)
    assert d_j(2, F(HALF, 1)) == F(HALF)


def test_degeneracy_validates_input():
    with pytest.raises(ValueError):
        d_k(1, F(0, 2, 0))
    with pytest.raises(IndexError):
        d_k(4, F(0, 1, 1))
    with pytest.raises(ValueError):
        d_j(1, F(1, 1))


def test_interpolation_endpoints():
    s = F(0, "1/3", "5/3")
    assert interpolate_degeneracy(0, d_k, d_s, 2, s) == d_k(2, s)
    assert interpolate_degeneracy(1, d_k, d_s, 2, s) == d_s(2, s)
    mid = interpolate_degeneracy(HALF, d_k, d_s, 1, F(0, 1, 1))
    assert mid == tuple((a + b) / 2 for a, b in zip(d_k(1, F(0, 1, 1)), d_s(1, F(0, 1, 1))))


@given(nonneg_vectors())
def test_xi_removes_at_most_one(t):
    tp = xi(t)
    assert all(0 <= b <= a for a, b in zip(t, tp))
    deficits = [sum(t[: k + 1]) - sum(tp[: k + 1]) for k in range(len(t))]
    assert all(d <= 1 for d in deficits)
    if t[0] >= 1:
        assert t[0] - tp[0] == 1
    if 1 in deficits:
        k = deficits.index(1)
        assert tp[k + 1 :] == t[k + 1 :]


@given(k_points(2, 7))
def test_xi_closure_on_k(s):
    x = xi(s)
    assert x[0] == 0 and is_k_point(x[1:])


@given(j_points(2, 7))
def test_xi_closure_on_j(v):
    x = xi(v)
    assert x[0] == 0 and is_j_point(x[1:])


@given(k_points(2, 7), st.data())
def test_dk_lands_in_k(s, data):
    j = data.draw(st.integers(1, len(s)))
    assert is_k_point(d_k(j, s))


@given(k_points(3, 7), st.data())
def test_dk_simplicial(s, data):
    j = data.draw(st.integers(2, len(s)))
    i = data.draw(st.integers(1, j - 1))
    assert d_k(i, d_k(j, s)) == d_k(j - 1, d_k(i, s))


@given(j_points(3, 7), st.data())
def test_dj_simplicial(v, data):
    j = data.draw(st.integers(2, len(v)))
    i = data.draw(st.integers(1, j - 1))
    assert d_j(i, d_j(j, v)) == d_j(j - 1, d_j(i, v))


@given(st.integers(3, 6), st.data())
def test_dk_on_inner_block(n, data):
    t = data.draw(st.integers(3, n - 1)) if n > 3 else 3
    assume(t < n)
    r = n + 1 - t
    k = data.draw(st.integers(1, r))
    j = data.draw(st.integers(k, k + t - 1))
    rho, tau = data.draw(k_point_of(r)), data.draw(k_point_of(t))
    assert d_k(j, boundary_insert(rho, tau, k)) == boundary_insert(rho, d_k(j - k + 1, tau), k)


@given(st.integers(2, 6), st.data())
def test_dj_left_of_insertion(n, data):
    t = data.draw(st.integers(2, n - 1)) if n > 2 else 2
    assume(t < n)
    r = n + 1 - t
    k = data.draw(st.integers(2, r)) if r >= 2 else None
    assume(k is not None)
    j = data.draw(st.integers(1, k - 1))
    rho, tau = data.draw(j_point_of(r)), data.draw(k_point_of(t))
    assert d_j(j, delta_insert(rho, tau, k)) == delta_insert(d_j(j, rho), tau, k - 1)
