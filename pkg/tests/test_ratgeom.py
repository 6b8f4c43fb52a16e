from fractions import Fraction

import pytest
from hypothesis import given

from assocpoly.associahedron import k_hrep
from assocpoly.homeo import alpha
from assocpoly.ratgeom import (
    DimensionLimitError,
    GeometryError,
    HRep,
    UnboundedError,
    affine,
    contains,
    rank,
    ray_exit,
    solve_unique,
    tight,
    vertex_enum,
)

from conftest import F, k_points, unit_interval


def test_contains_equality_constraint():
    h = HRep.build(2, equalities=[((1, 0), 0)])
    assert contains(h, F(0, 1))
    assert not contains(h, F(1, 0))


def test_contains_k3_interior():
    assert contains(k_hrep(3), F(0, Fraction(1, 2), Fraction(3, 2)))


def test_contains_rejects_wrong_dimension():
    with pytest.raises(GeometryError):
        contains(k_hrep(3), F(0, 1))


def test_ray_exit_on_segment():
    exit_, t = ray_exit(k_hrep(3), F(0, "1/2", "3/2"), F(0, "3/4", "5/4"))
    assert exit_ == F(0, 1, 1)
    assert t == Fraction(1, 2)


def test_ray_exit_from_boundary_point():
    exit_, t = ray_exit(k_hrep(3), F(0, "1/2", "3/2"), F(0, 0, 2))
    assert (exit_, t) == (F(0, 0, 2), 0)


def test_ray_exit_midpoint_weight():
    center = F(0, "1/2", "3/2")
    mid = affine(Fraction(1, 2), center, F(0, 1, 1))
    assert ray_exit(k_hrep(3), center, mid)[1] == Fraction(1, 2)


@given(k_points(3, 6))
def test_ray_exit_lands_on_boundary(p):
    h = k_hrep(len(p))
    center = alpha(1, len(p))
    if p == center:
        return
    exit_, t = ray_exit(h, center, p)
    assert contains(h, exit_) and tight(h, exit_)
    assert 0 <= t < 1
    assert affine(t, center, exit_) == p


def test_vertex_enum_small_cases():
    assert vertex_enum(k_hrep(3)) == {F(0, 0, 2), F(0, 1, 1)}
    assert vertex_enum(k_hrep(2)) == {F(0, 1)}
    square = HRep.build(2, [((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)])
    assert vertex_enum(square) == {F(0, 0), F(0, 1), F(1, 0), F(1, 1)}


def test_vertex_enum_rejects_unbounded_and_large():
    with pytest.raises(UnboundedError):
        vertex_enum(HRep.build(1, [((-1,), 0)]))
    with pytest.raises(DimensionLimitError):
        vertex_enum(k_hrep(12))


def test_linear_algebra_helpers():
    assert rank([F(1, 0), F(2, 0), F(0, 1)]) == 2
    assert solve_unique([F(1, 1), F(1, -1)], F(2, 0), 2) == F(1, 1)
    assert solve_unique([F(1, 1)], F(2), 2) is None


@given(k_points(2, 6), k_points(2, 6), unit_interval)
def test_affine_endpoints(p, q, t):
    if len(p) != len(q):
        return
    assert affine(1, p, q) == p and affine(0, p, q) == q
    assert contains(k_hrep(len(p)), affine(t, p, q))
