from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from assocpoly.associahedron import (
    KFaceId,
    boundary_insert,
    boundary_insert_dual,
    face_decompose,
    face_decompositions,
    face_membership,
    is_k_point,
    k_hrep,
    k_vertices,
    monoid_product,
    on_boundary,
    pl_vertices,
)
from assocpoly.ratgeom import contains, vertex_enum

from conftest import F, k_point_of, k_points

A2 = F(0, 1)


def test_small_associahedra():
    assert vertex_enum(k_hrep(1)) == {F(0)}
    assert vertex_enum(k_hrep(2)) == {A2}
    assert is_k_point(F(0, "1/2", "3/2"))
    assert not is_k_point(F(0, "3/2", "1/2"))


def test_insertion_examples():
    assert boundary_insert(A2, A2, 1) == F(0, 1, 1)
    assert boundary_insert(A2, A2, 2) == F(0, 0, 2)
    assert boundary_insert(A2, F(0, 1, 1), 1) == F(0, 1, 1, 1)


def test_dual_insertion_relabels():
    assert boundary_insert_dual(A2, A2, 2) == F(0, 1, 1)
    assert boundary_insert_dual(A2, A2, 1) == F(0, 0, 2)


def test_insertion_into_unit_factor_is_identity():
    assert boundary_insert(F(0), F(0, 1, 1), 1) == F(0, 1, 1)


def test_face_membership_examples():
    assert face_membership(F(0, 0, 2), 2)
    assert face_membership(F(0, 1, 1), 1)
    assert not on_boundary(F(0, "1/2", "3/2"))
    assert face_membership(F(0, 1, 1, 1), KFaceId(1, 2, 3))


def test_face_decompose_examples():
    assert tuple(face_decompose(F(0, 1, 1))) == (1, 2, 2, A2, A2)
    assert tuple(face_decompose(F(0, 0, 2))) == (2, 2, 2, A2, A2)
    assert tuple(face_decompose(F(0, 1, 1, 1))) == (1, 2, 3, A2, F(0, 1, 1))


def test_face_decompose_rejects_interior():
    with pytest.raises(ValueError):
        face_decompose(F(0, "1/2", "3/2"))


def test_monoid_product_examples():
    assert monoid_product(A2, A2) == F(0, 1, 1)
    left = monoid_product(monoid_product(A2, A2), A2)
    assert left == F(0, 1, 1, 1) == monoid_product(A2, monoid_product(A2, A2))


def test_lattice_vertices():
    assert k_vertices(4) == {F(0, 0, 2, 1), F(0, 0, 1, 2), F(0, 0, 0, 3), F(0, 1, 0, 2), F(0, 1, 1, 1)}
    assert len(k_vertices(5)) == 14
    for n in range(1, 6):
        assert pl_vertices(n) == k_vertices(n)
        assert vertex_enum(k_hrep(n)) <= k_vertices(n)


@st.composite
def insertion_data(draw, n_max=7):
    n = draw(st.integers(3, n_max))
    t = draw(st.integers(2, n - 1))
    r = n + 1 - t
    j = draw(st.integers(1, r))
    return draw(k_point_of(r)), draw(k_point_of(t)), j


@given(insertion_data())
def test_insertion_lands_on_boundary_and_inverts(data):
    rho, tau, j = data
    u = boundary_insert(rho, tau, j)
    assert contains(k_hrep(len(u)), u) and on_boundary(u)
    assert any((d.j, d.rho, d.tau) == (j, rho, tau) for d in face_decompositions(u))
    assert face_membership(u, KFaceId(j, len(rho), len(tau)))


@given(k_points(3, 7))
def test_decompositions_recompose(u):
    for d in face_decompositions(u):
        assert boundary_insert(d.rho, d.tau, d.j) == u
    assert bool(face_decompositions(u)) == on_boundary(u)


@given(k_points(2, 4), k_points(2, 4), k_points(2, 4))
def test_monoid_product_associative(a, b, c):
    assert monoid_product(monoid_product(a, b), c) == monoid_product(a, monoid_product(b, c))


@given(k_points(2, 6))
def test_monoid_product_degree(a):
    p = monoid_product(a, A2)
    assert len(p) == len(a) + 1 and is_k_point(p)
    assert sum(p) == Fraction(len(p) - 1)
