"""Special points, the homeomorphisms omega^a, the sweeps eta, the radial
degeneracies d^S and the rescaling maps f_{a,b}.

omega^a and d^S are both radial.  A point ``sigma`` of K(n) other than the
center is written ``t * center + (1 - t) * x`` with ``x`` on the boundary
(:func:`ratgeom.ray_exit`).  ``x`` is then decomposed as an insertion
``d_k(rho; tau)`` and the value on ``x`` comes from recursion on ``rho``
or ``tau``.

The rescaling map works pointwise.  A point of J^c(n) whose height ``h``
(see :func:`multiplihedron.height`) is positive sits, after lowering its
last coordinate by ``c - h``, on a graft face of J^h(n).  Rescaling
multiplies every such level by the same factor and recurses into the
graft factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence, Union

from .associahedron import (
    KPoint,
    boundary_insert,
    face_decompositions,
    is_k_point,
    k_hrep,
)
from .degeneracy import d_k
from .multiplihedron import (
    HALF,
    JPoint,
    delta_graft,
    delta_insert,
    delta_rel,
    embed_in_k,
    height,
    is_j_point,
    rel_decompositions,
    shift_embed,
)
from .ratgeom import RatLike, RatVec, affine, ray_exit, rat


# --- special points -------------------------------------------------------

def alpha(a: RatLike, n: int) -> KPoint:
    """``(0, 1 - a/2, 1, ..., 1, 1 + a/2)``; interior of K(n) for n >= 3, a > 0.

    K(2) is a single point, so ``alpha(a, 2) = (0, 1)`` for every a.
    """
    a = rat(a)
    if n < 1:
        raise ValueError("alpha needs n >= 1")
    if n == 1:
        return (Fraction(0),)
    if n == 2:
        return (Fraction(0), Fraction(1))
    return (Fraction(0), 1 - a / 2) + (Fraction(1),) * (n - 3) + (1 + a / 2,)


def beta(a: RatLike, n: int) -> JPoint:
    """``(a, 1, ..., 1)`` in J^a(n)."""
    a = rat(a)
    if n < 1:
        raise ValueError("beta needs n >= 1")
    return (a,) + (Fraction(1),) * (n - 1)


def radial_split(sigma: KPoint, center: KPoint) -> tuple[Fraction, RatVec]:
    """``(t, x)`` with ``sigma = t*center + (1-t)*x`` and ``x`` on the boundary."""
    x, t = ray_exit(k_hrep(len(sigma)), center, sigma)
    return t, x


# --- omega ----------------------------------------------------------------

def omega(a: RatLike, sigma: Sequence[Fraction], choice: int = 0) -> JPoint:
    """omega^a_n : K(n) -> J^a_0(n).

    ``choice`` selects which face decomposition of the boundary point is
    used at the top level; the result does not depend on it.
    """
    a = rat(a)
    sigma = tuple(rat(c) for c in sigma)
    if not 0 <= a <= 1:
        raise ValueError(f"parameter a = {a} outside [0, 1]")
    if not is_k_point(sigma):
        raise ValueError(f"not a point of K({len(sigma)}): {sigma}")
    return _omega(a, sigma, choice)


@lru_cache(maxsize=1 << 14)
def _omega(a: Fraction, sigma: KPoint, choice: int = 0) -> JPoint:
    n = len(sigma)
    if a == 0:
        return sigma
    if n <= 2:
        return beta(a, n)
    center = alpha(a, n)
    if sigma == center:
        return beta(a, n)
    t, x = radial_split(sigma, center)
    ds = face_decompositions(x)
    d = ds[choice % len(ds)]
    edge = delta_insert(_omega(a, d.rho), d.tau, d.j)
    return affine(t, beta(a, n), edge)


def omega_all_choices(a: RatLike, sigma: KPoint) -> set[JPoint]:
    """omega evaluated through every top-level decomposition (a set of size one)."""
    a = rat(a)
    if a == 0 or len(sigma) <= 2 or sigma == alpha(a, len(sigma)):
        return {omega(a, sigma)}
    _, x = radial_split(sigma, alpha(a, len(sigma)))
    return {omega(a, sigma, i) for i in range(len(face_decompositions(x)))}


def eta(a: RatLike, t: RatLike, sigma: KPoint) -> JPoint:
    """eta^a(t, sigma): ``omega^{at}(sigma)`` viewed inside J^a(n)."""
    a, t = rat(a), rat(t)
    if not 0 <= t <= 1:
        raise ValueError(f"sweep time {t} outside [0, 1]")
    return shift_embed(omega(a * t, sigma), a * t, a)


def eta1(t: RatLike, sigma: KPoint) -> KPoint:
    """eta^1(t, sigma) in K(n+1)."""
    t = rat(t)
    return embed_in_k(omega(t, sigma), t)


# --- Stasheff degeneracies -----------------------------------------------

def _forced(n: int) -> KPoint:
    return (Fraction(0),) if n == 1 else (Fraction(0), Fraction(1))


def boundary_degeneracy(j: int, k: int, rho: KPoint, tau: KPoint, deg) -> KPoint:
    """Value of a degeneracy family on ``d_k(rho; tau)`` from its values on the factors.

    ``deg(i, p)`` evaluates the family on a smaller point.  Factors of
    arity one act as identities, which absorbs the small-arity cases.
    """
    t = len(tau)
    if j < k:
        return boundary_insert(deg(j, rho), tau, k - 1)
    if j < k + t:
        return boundary_insert(rho, deg(j - k + 1, tau), k)
    return boundary_insert(deg(j - t + 1, rho), tau, k)


def d_s(j: int, sigma: Sequence[Fraction], a: RatLike = 1, choice: int = 0) -> KPoint:
    """Radial degeneracy d^S_j : K(n) -> K(n-1), centered at ``alpha(a, n)``.

    ``a = 1`` is the classical choice.  Its value on the boundary is forced by
    the degeneracy case table applied to the face decomposition.
    """
    a = rat(a)
    sigma = tuple(rat(c) for c in sigma)
    if not is_k_point(sigma):
        raise ValueError(f"not a point of K({len(sigma)}): {sigma}")
    n = len(sigma)
    if n < 2:
        raise ValueError("a degeneracy needs n >= 2")
    if not 1 <= j <= n:
        raise IndexError(f"degeneracy index {j} outside 1..{n}")
    if a <= 0:
        raise ValueError("the center parameter must be positive")
    return _d_s(j, sigma, a, choice)


def _d_s(j: int, sigma: KPoint, a: Fraction, choice: int = 0) -> KPoint:
    n = len(sigma)
    if n <= 2:
        return _forced(n - 1)
    center = alpha(a, n)
    if sigma == center:
        return alpha(a, n - 1)
    t, x = radial_split(sigma, center)
    ds = face_decompositions(x)
    d = ds[choice % len(ds)]
    edge = boundary_degeneracy(j, d.j, d.rho, d.tau, lambda i, p: _d_s_any(i, p, a))
    return affine(t, alpha(a, n - 1), edge)


def _d_s_any(j: int, p: KPoint, a: Fraction) -> KPoint:
    if len(p) == 1:
        raise ArithmeticError("degeneracy applied to K(1)")
    return _d_s(j, p, a)


def d_s_all_choices(j: int, sigma: KPoint, a: RatLike = 1) -> set[KPoint]:
    a = rat(a)
    n = len(sigma)
    if n <= 2 or sigma == alpha(a, n):
        return {d_s(j, sigma, a)}
    _, x = radial_split(sigma, alpha(a, n))
    return {d_s(j, sigma, a, i) for i in range(len(face_decompositions(x)))}


# --- rescaling ------------------------------------------------------------

def rescale(p: Sequence[Fraction], level: RatLike, factor: RatLike, choice: int = 0) -> JPoint:
    """Pointwise f: J^c(n) -> J^{factor * c}(n), every graft level scaled by ``factor``.

    ``choice`` picks among graft decompositions at the top level; the value
    does not depend on it.
    """
    c, lam = rat(level), rat(factor)
    p = tuple(rat(x) for x in p)
    if not 0 <= c < 1 or lam < 0 or lam * c > 1:
        raise ValueError("need a source level in [0, 1) and a target level in [0, 1]")
    if not is_j_point(p, c):
        raise ValueError(f"not a point of J^{c}({len(p)}): {p}")
    return _rescale(p, c, lam, choice)


def _rescale(p: JPoint, c: Fraction, lam: Fraction, choice: int = 0) -> JPoint:
    n = len(p)
    if n == 1:
        return (lam * c,)
    h = height(p)
    if h == 0:
        return tuple(p[:-1]) + (p[-1] - c + lam * c,)
    q = tuple(p[:-1]) + (p[-1] - (c - h),)
    gs = rel_decompositions(q, h, h)
    g = gs[choice % len(gs)]
    inner = delta_graft(g.tau, [_rescale(r, h, lam) for r in g.rhos], lam * h)
    return tuple(inner[:-1]) + (inner[-1] + lam * (c - h),)


def rescale_all_choices(p: JPoint, level: RatLike, factor: RatLike) -> set[JPoint]:
    c = rat(level)
    h = height(p)
    if len(p) == 1 or h == 0:
        return {rescale(p, c, factor)}
    q = tuple(p[:-1]) + (p[-1] - (c - h),)
    k = len(rel_decompositions(q, h, h))
    return {rescale(p, c, factor, i) for i in range(k)}


def f_ab_point(a: RatLike, b: RatLike, p: JPoint) -> JPoint:
    """f_{a,b} on a point of J^a(n), 0 < a < 1."""
    a, b = rat(a), rat(b)
    if not 0 < a < 1 or not 0 <= b <= 1:
        raise ValueError("f_{a,b} needs 0 < a < 1 and 0 <= b <= 1")
    return rescale(p, a, b / a)


def pi_geometric(p: JPoint, a: RatLike = HALF) -> KPoint:
    """pi_a = f_{a,0} : J^a(n) -> K(n)."""
    return f_ab_point(a, 0, p)


# --- formal expressions ---------------------------------------------------

@dataclass(frozen=True)
class KLeaf:
    """A K-point used as a J^0 point."""
    point: KPoint


@dataclass(frozen=True)
class BasePoint:
    """A concrete point of J^level(n)."""
    point: JPoint
    level: Fraction


@dataclass(frozen=True)
class DeltaJ:
    """delta_j(inner; tau)."""
    j: int
    inner: "FormalJExpr"
    tau: KPoint


@dataclass(frozen=True)
class DeltaGraft:
    """delta(tau; parts) with every part at the same level."""
    tau: KPoint
    parts: tuple["FormalJExpr", ...]


@dataclass(frozen=True)
class DeltaRel:
    """delta_rel(outer; parts): outer at level r, parts at level a, result at a + (1-a) r."""
    outer: "FormalJExpr"
    parts: tuple["FormalJExpr", ...]


@dataclass(frozen=True)
class Shift:
    """``inner`` pushed from its level up to ``level``."""
    inner: "FormalJExpr"
    level: Fraction


FormalJExpr = Union[KLeaf, BasePoint, DeltaJ, DeltaGraft, DeltaRel, Shift]


class ExprError(ValueError):
    pass


def evaluate(e: FormalJExpr) -> tuple[JPoint, Fraction]:
    """``(point, level)`` of a well-formed expression."""
    if isinstance(e, KLeaf):
        if not is_k_point(e.point):
            raise ExprError(f"KLeaf {e.point} is not in K(n)")
        return tuple(e.point), Fraction(0)
    if isinstance(e, BasePoint):
        lv = rat(e.level)
        if not is_j_point(e.point, lv):
            raise ExprError(f"BasePoint {e.point} is not in J^{lv}")
        return tuple(e.point), lv
    if isinstance(e, DeltaJ):
        p, lv = evaluate(e.inner)
        if not is_k_point(e.tau):
            raise ExprError("DeltaJ needs a K-point")
        return delta_insert(p, e.tau, e.j), lv
    if isinstance(e, DeltaGraft):
        if not e.parts or not is_k_point(e.tau) or len(e.tau) != len(e.parts):
            raise ExprError("DeltaGraft arity mismatch")
        vals = [evaluate(x) for x in e.parts]
        levels = {lv for _, lv in vals}
        if len(levels) != 1:
            raise ExprError("DeltaGraft parts live at different levels")
        (lv,) = levels
        return delta_graft(e.tau, [p for p, _ in vals], lv), lv
    if isinstance(e, DeltaRel):
        outer, r = evaluate(e.outer)
        vals = [evaluate(x) for x in e.parts]
        levels = {lv for _, lv in vals}
        if len(levels) != 1 or len(outer) != len(vals):
            raise ExprError("DeltaRel parts mismatch")
        (lv,) = levels
        if lv == 1:
            raise ExprError("DeltaRel parts at level 1")
        return delta_rel(outer, [p for p, _ in vals], lv), lv + (1 - lv) * r
    if isinstance(e, Shift):
        p, lv = evaluate(e.inner)
        return shift_embed(p, lv, e.level), rat(e.level)
    raise ExprError(f"unknown expression node {e!r}")


def f_ab(a: RatLike, b: RatLike, e: FormalJExpr) -> FormalJExpr:
    """Rewrite an expression living at level ``a`` so it lives at level ``b``.

    Every level is multiplied by ``b / a``; K-points are untouched.
    """
    a, b = rat(a), rat(b)
    if not 0 < a < 1 or not 0 <= b <= 1:
        raise ValueError("f_{a,b} needs 0 < a < 1 and 0 <= b <= 1")
    lam = b / a
    return _scale_expr(e, lam)


def _scale_expr(e: FormalJExpr, lam: Fraction) -> FormalJExpr:
    if isinstance(e, KLeaf):
        return e
    if isinstance(e, BasePoint):
        lv = rat(e.level)
        return BasePoint(_rescale(tuple(e.point), lv, lam), lam * lv)
    if isinstance(e, DeltaJ):
        return DeltaJ(e.j, _scale_expr(e.inner, lam), e.tau)
    if isinstance(e, DeltaGraft):
        return DeltaGraft(e.tau, tuple(_scale_expr(x, lam) for x in e.parts))
    if isinstance(e, Shift):
        return Shift(_scale_expr(e.inner, lam), lam * rat(e.level))
    if isinstance(e, DeltaRel):
        p, lv = evaluate(e)
        return BasePoint(_rescale(p, lv, lam), lam * lv)
    raise ExprError(f"unknown expression node {e!r}")


__all__ = [
    "alpha", "beta", "radial_split", "omega", "omega_all_choices", "eta", "eta1",
    "boundary_degeneracy", "d_s", "d_s_all_choices", "rescale", "rescale_all_choices",
    "f_ab_point", "pi_geometric", "KLeaf", "BasePoint", "DeltaJ", "DeltaGraft",
    "DeltaRel", "Shift", "FormalJExpr", "ExprError", "evaluate", "f_ab",
]
