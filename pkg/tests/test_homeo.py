from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from assocpoly.associahedron import boundary_insert, insert
from assocpoly.homeo import (
    BasePoint,
    DeltaGraft,
    DeltaJ,
    ExprError,
    KLeaf,
    Shift,
    alpha,
    beta,
    d_s,
    d_s_all_choices,
    eta,
    eta1,
    evaluate,
    f_ab,
    f_ab_point,
    omega,
    omega_all_choices,
    pi_geometric,
    rescale_all_choices,
)
from assocpoly.multiplihedron import HALF, delta_insert, embed_in_k, in_j0, is_j_point

from conftest import F, j_point_of, k_point_of, k_points


def test_base_points():
    assert beta(HALF, 3) == F(HALF, 1, 1)
    assert alpha(HALF, 3) == F(0, "3/4", "5/4")
    assert alpha(0, 4) == F(0, 1, 1, 1)


def test_omega_examples():
    assert omega(HALF, F(0, 1, 1)) == F(0, "3/2", 1)
    assert omega(HALF, alpha(HALF, 3)) == beta(HALF, 3)
    assert omega(0, F(0, "1/3", "5/3")) == F(0, "1/3", "5/3")


def test_omega_validates():
    with pytest.raises(ValueError):
        omega(2, F(0, 1))
    with pytest.raises(ValueError):
        omega(HALF, F(0, 2, 0))


def test_eta_endpoints():
    s = F(0, "1/2", "3/2")
    assert eta(HALF, 0, s) == insert(F(HALF), s, 1)
    assert eta1(0, s) == insert(F(0, 1), s, 2)
    assert eta1(1, s) == embed_in_k(omega(1, s), 1)


@given(k_points(3, 5), st.sampled_from([HALF, Fraction(1), Fraction(1, 3)]))
def test_omega_lands_in_j0(s, a):
    w = omega(a, s)
    assert is_j_point(w, a) and in_j0(w, a)
    assert len(omega_all_choices(a, s)) == 1


@given(st.integers(3, 5), st.data())
def test_omega_on_faces(n, data):
    t = data.draw(st.integers(2, n - 1))
    r = n + 1 - t
    k = data.draw(st.integers(1, r))
    rho, tau = data.draw(k_point_of(r)), data.draw(k_point_of(t))
    assert omega(HALF, boundary_insert(rho, tau, k)) == delta_insert(omega(HALF, rho), tau, k)


@given(k_points(2, 5), st.data())
def test_radial_degeneracy_well_defined(s, data):
    j = data.draw(st.integers(1, len(s)))
    assert len(d_s_all_choices(j, s)) == 1
    assert d_s(j, s) in d_s_all_choices(j, s)


def test_radial_degeneracy_fixes_center():
    for n in range(2, 6):
        for j in range(1, n + 1):
            assert d_s(j, alpha(1, n)) == alpha(1, n - 1)


def test_pi_examples():
    assert pi_geometric(beta(HALF, 4)) == F(0, 1, 1, 1)
    assert pi_geometric(F(0, 0, "5/2")) == F(0, 0, 2)


@given(j_point_of(4), st.sampled_from([Fraction(1, 4), Fraction(2, 3)]))
def test_f_functorial(p, b):
    q = f_ab_point(HALF, b, p)
    assert is_j_point(q, b)
    assert f_ab_point(b, HALF, q) == p
    assert len(rescale_all_choices(p, HALF, 0)) == 1


def test_formal_expressions():
    tau = F(0, "1/3", "5/3")
    e = DeltaGraft(tau, tuple(BasePoint(F(HALF), HALF) for _ in range(3)))
    pt, level = evaluate(e)
    assert (pt, level) == (F(HALF, "2/3", "4/3"), HALF)
    assert evaluate(f_ab(HALF, 0, e)) == (tau, 0)
    assert evaluate(f_ab(HALF, HALF, e)) == (pt, level)
    assert evaluate(DeltaJ(1, BasePoint(beta(HALF, 2), HALF), F(0, 1)))[0] == F(0, "3/2", 1)
    assert evaluate(Shift(KLeaf(tau), HALF)) == (F(0, "1/3", "13/6"), HALF)


def test_malformed_expressions():
    with pytest.raises(ExprError):
        evaluate(KLeaf(F(0, 2, 0)))
    with pytest.raises(ExprError):
        evaluate(DeltaGraft(F(0, 1), (BasePoint(F(HALF), HALF),)))
