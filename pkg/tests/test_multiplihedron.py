from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from assocpoly.associahedron import k_hrep
from assocpoly.multiplihedron import (
    HALF,
    CoordFace,
    DeltaFace,
    GraftFace,
    Graft,
    InJa,
    delta_decompositions,
    delta_graft,
    delta_insert,
    delta_rel,
    embed_in_k,
    graft_decompositions,
    height,
    in_j0,
    is_j_point,
    j_face_membership,
    j_hrep,
    on_j_boundary,
    recompose,
    shift_embed,
    sweep_decompose,
)
from assocpoly.ratgeom import vertex_enum
from assocpoly.trees import j_lattice

from conftest import F, j_point_of, j_points, k_point_of

H = HALF


def test_small_multiplihedra():
    assert vertex_enum(j_hrep(1, H)) == {F(H)}
    a = Fraction(1, 3)
    assert vertex_enum(j_hrep(2, a)) == {F(0, 1 + a), F(a, 1)}
    assert vertex_enum(j_hrep(3, H)) == {F(0, 0, "5/2"), F(0, "3/2", 1), F(H, 1, 1), F(H, 0, 2)}


@pytest.mark.parametrize("n", range(1, 8))
def test_level_zero_is_associahedron(n):
    assert j_hrep(n, 0) == k_hrep(n)


def test_embed_in_k_examples():
    assert embed_in_k(F(H)) == F(0, 1)
    assert embed_in_k(F(0, "3/2")) == F(0, 0, 2)


def test_delta_insert_examples():
    assert delta_insert(F(H, 1), F(0, 1), 1) == F(0, "3/2", 1)
    assert delta_insert(F(H, 1), F(0, 1), 2) == F(H, 0, 2)
    assert delta_insert(F(H), F(0, 1), 1) == F(0, "3/2")


def test_graft_examples():
    assert delta_graft(F(0, 1), [F(H), F(H)]) == F(H, 1)
    assert delta_graft(F(0, 1), [F(H), F(0, "3/2")]) == F(H, 0, 2)
    tau = F(0, "1/3", "5/3")
    assert delta_graft(tau, [F(H)] * 3) == tuple(H + (1 - H) * c for c in tau)


def test_relative_graft_example():
    s = Fraction(1, 3)
    assert delta_rel(F(s, 2 - s), [F(H), F(H)], H) == F(H + s / 2, Fraction(3, 2) - s / 2)


def test_special_faces():
    assert in_j0(F(H, 1))
    assert j_face_membership(F(0, "3/2"), CoordFace(1))
    assert not on_j_boundary(F("1/4", "5/4"))
    assert j_face_membership(F(0, "3/2", 1), DeltaFace(1, 2, 2))
    assert j_face_membership(F(H, 0, 2), GraftFace((1, 2)))


def test_sweep_examples():
    assert sweep_decompose(F("3/4", "5/4"), 1, H) == Graft(F(H, "3/2"), (F(H), F(H)))
    assert sweep_decompose(F(0, 2), 1, H) == InJa(F(0, "3/2"))
    p = F("1/4", "5/4")
    assert sweep_decompose(p, H, H) == InJa(p)


def test_shift_embed_identity():
    p = F("1/4", "5/4")
    assert shift_embed(p, H, H) == p


def test_height():
    assert height(F(H, 1, 1)) == H
    assert height(F(0, 0, "5/2")) == 0
    assert height(F(1, 1, 1)) == 1


@st.composite
def delta_data(draw, n_max=6):
    n = draw(st.integers(2, n_max))
    t = draw(st.integers(2, n))
    r = n + 1 - t
    return draw(j_point_of(r)), draw(k_point_of(t)), draw(st.integers(1, r))


@given(delta_data())
def test_delta_insert_lands_on_boundary(data):
    rho, tau, j = data
    v = delta_insert(rho, tau, j)
    assert is_j_point(v) and on_j_boundary(v)
    assert any((d.j, d.rho, d.tau) == (j, rho, tau) for d in delta_decompositions(v))


@st.composite
def graft_data(draw, n_max=6):
    t = draw(st.integers(2, n_max))
    sizes = draw(st.lists(st.integers(1, 2), min_size=t, max_size=t))
    return draw(k_point_of(t)), [draw(j_point_of(m)) for m in sizes]


@given(graft_data())
def test_graft_lands_in_j0_and_inverts(data):
    tau, rhos = data
    v = delta_graft(tau, rhos)
    assert is_j_point(v) and in_j0(v)
    assert any(g.tau == tau and list(g.rhos) == rhos for g in graft_decompositions(v))


@given(j_points(1, 5, a=1), st.sampled_from([Fraction(0), Fraction(1, 4), H]))
def test_sweep_round_trip(v, a):
    assert recompose(sweep_decompose(v, 1, a), 1, a) == v


def test_lattice_points_lie_in_polytope():
    for n in range(1, 6):
        assert all(is_j_point(v) for v in j_lattice(n))
