"""The multiplihedra J^a(n), 0 <= a <= 1.

``v`` is a point of J^a(n) when every partial sum ``v_1 + ... + v_j`` with
``j < n`` is at most ``j - 1 + a`` and the total is ``n - 1 + a``.  At
``a = 0`` this is K(n); ``J(n)`` means ``J^{1/2}(n)``.

Two families of boundary operators act here:

* ``delta_insert(rho, tau, j)`` grafts a K-point into a J-point; it uses
  the same formula as the associahedron insertion.
* ``delta_graft(tau, rhos, a)`` feeds the J-points ``rhos`` into the inputs
  of a K-point ``tau``.  ``delta_rel`` is the same formula with a J-point
  on the outside.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .associahedron import insert, is_k_point, random_weights
from .ratgeom import HRep, RatLike, RatVec, barycentric, rat

JPoint = RatVec
HALF = Fraction(1, 2)


def _check_a(a: Fraction) -> Fraction:
    a = rat(a)
    if not 0 <= a <= 1:
        raise ValueError(f"parameter a = {a} outside [0, 1]")
    return a


@lru_cache(maxsize=None)
def j_hrep(n: int, a: RatLike = HALF) -> HRep:
    """Inequality system of J^a(n); ``j_hrep(n, 0) == k_hrep(n)``."""
    a = _check_a(a)
    if n < 1:
        raise ValueError("J^a(n) needs n >= 1")
    unit = lambda i: tuple(Fraction(int(k == i)) for k in range(n))
    prefix = lambda j: tuple(Fraction(int(k < j)) for k in range(n))
    eqs = []
    if a == 0:
        eqs.append((unit(0), Fraction(0)))
    if n >= 2 or a != 0:
        eqs.append((prefix(n), n - 1 + a))
    lo = 1 if a == 0 else 0
    ineqs = [(tuple(-c for c in unit(i)), Fraction(0)) for i in range(lo, n)]
    if a != 0 and n >= 2:
        ineqs.append((prefix(1), a))
    ineqs += [(prefix(j), j - 1 + a) for j in range(2, n)]
    return HRep(n, tuple(ineqs), tuple(eqs))


def is_j_point(v: Sequence[Fraction], a: RatLike = HALF) -> bool:
    a = rat(a)
    n = len(v)
    if n < 1 or any(c < 0 for c in v):
        return False
    s = Fraction(0)
    for j in range(n - 1):
        s += v[j]
        if s > j + a:
            return False
    return s + v[-1] == n - 1 + a


def height(v: Sequence[Fraction]) -> Fraction:
    """Smallest a with ``v`` (last coordinate shifted) inside J^a(n).

    Equals ``max(0, max_{j<n} (v_1 + ... + v_j - (j - 1)))``.
    """
    best = Fraction(0)
    s = Fraction(0)
    for j in range(len(v) - 1):
        s += v[j]
        best = max(best, s - j)
    return best


def in_j0(v: Sequence[Fraction], a: RatLike = HALF) -> bool:
    """The special face J^a_0(n): some proper prefix sum equals j - 1 + a."""
    a = rat(a)
    s = Fraction(0)
    for j in range(len(v) - 1):
        s += v[j]
        if s == j + a:
            return True
    return False


def on_j_boundary(v: Sequence[Fraction], a: RatLike = HALF) -> bool:
    n = len(v)
    if n < 2:
        return False
    return any(c == 0 for c in v[:-1]) or in_j0(v, a)


def embed_in_k(v: JPoint, a: RatLike = HALF) -> RatVec:
    """J^a(n) -> K(n+1): ``(0, v_1, ..., v_{n-1}, v_n + 1 - a)``."""
    a = rat(a)
    return (Fraction(0),) + tuple(v[:-1]) + (v[-1] + 1 - a,)


def shift_embed(v: JPoint, a: RatLike, b: RatLike) -> JPoint:
    """J^a(n) -> J^b(n) for a <= b, moving the last coordinate by b - a."""
    a, b = rat(a), rat(b)
    if a > b:
        raise ValueError("shift_embed needs a <= b")
    return tuple(v[:-1]) + (v[-1] + (b - a),)


def delta_insert(rho: JPoint, tau: RatVec, j: int) -> JPoint:
    """delta_j(rho; tau): insert the K-point ``tau`` at input j of ``rho``."""
    return insert(rho, tau, j)


def delta_rel(outer: Sequence[Fraction], rhos: Sequence[JPoint], a: RatLike) -> JPoint:
    """Block formula: concatenate ``rhos`` and add ``(1 - a) * outer_i`` to block i's end.

    With ``outer`` in J^r(t) and each ``rho_i`` in J^a(n_i) the result lies in
    J^b(n) for ``b = a + (1 - a) r``.
    """
    a = rat(a)
    if len(outer) != len(rhos):
        raise ValueError(f"{len(outer)} inputs but {len(rhos)} blocks")
    out: list[Fraction] = []
    for u, block in zip(outer, rhos):
        out.extend(block[:-1])
        out.append(block[-1] + (1 - a) * u)
    return tuple(out)


def delta_graft(tau: RatVec, rhos: Sequence[JPoint], a: RatLike = HALF) -> JPoint:
    """delta(tau; rho_1, ..., rho_t) with ``tau`` in K(t)."""
    return delta_rel(tau, rhos, a)


def rel_level(a: RatLike, b: RatLike) -> Fraction:
    """The outer parameter (b - a) / (1 - a) used by ``delta_rel``."""
    a, b = rat(a), rat(b)
    if not 0 <= a <= b <= 1 or a == 1:
        raise ValueError("need 0 <= a <= b <= 1 and a < 1")
    return (b - a) / (1 - a)


# --- faces --------------------------------------------------------------

@dataclass(frozen=True)
class DeltaFace:
    """J^a_j(r, t): image of J^a(r) x K(t) under delta_j."""
    j: int
    r: int
    t: int


@dataclass(frozen=True)
class GraftFace:
    """J^a(t; n_1, ..., n_t): image of K(t) x prod J^a(n_i)."""
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class CoordFace:
    """J^a_j(n) (v_j = 0) for j >= 1, and J^a_0(n) for j = 0."""
    j: int


@dataclass(frozen=True)
class DeltaZeroFace:
    """J^a_k(r, s)_0: delta_k images whose outer factor lies in J^a_0(r)."""
    k: int
    r: int
    s: int


JFaceId = Union[DeltaFace, GraftFace, CoordFace, DeltaZeroFace]


class DeltaDecomposition(NamedTuple):
    j: int
    r: int
    t: int
    rho: JPoint
    tau: RatVec


class GraftDecomposition(NamedTuple):
    tau: RatVec
    rhos: tuple[JPoint, ...]


def delta_decompositions(v: JPoint, a: RatLike = HALF) -> list[DeltaDecomposition]:
    """Every way to write ``v`` as delta_j(rho; tau) with t >= 2, r >= 1."""
    a = rat(a)
    n = len(v)
    out = []
    for j in range(1, n + 1):
        for t in range(2, n + 1):
            r = n - t + 1
            if j > r:
                break
            block = v[j - 1 : j + t - 2]
            T = (t - 1) - sum(block, Fraction(0))
            tau = tuple(block) + (T,)
            vj = v[j + t - 2] - T
            if vj < 0 or not is_k_point(tau):
                continue
            rho = tuple(v[: j - 1]) + (vj,) + tuple(v[j + t - 1 :])
            if is_j_point(rho, a):
                out.append(DeltaDecomposition(j, r, t, rho, tau))
    return out


def compositions(n: int, parts: int | None = None):
    """Ordered compositions of n (into ``parts`` parts if given)."""
    if parts is None:
        for k in range(1, n + 1):
            yield from compositions(n, k)
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def _blocks(v: Sequence[Fraction], sizes: Sequence[int]) -> list[tuple[Fraction, ...]]:
    out, i = [], 0
    for s in sizes:
        out.append(tuple(v[i : i + s]))
        i += s
    return out


def rel_decompositions(v: JPoint, b: RatLike, a: RatLike, min_parts: int = 2) -> list[GraftDecomposition]:
    """All ``(outer, rhos)`` with ``delta_rel(outer, rhos, a) == v``.

    ``v`` lies in J^b(n); the outer factor lies in J^r(t), r = (b-a)/(1-a), and
    each ``rhos[i]`` in J^a(n_i).
    """
    a, b = rat(a), rat(b)
    r = rel_level(a, b)
    n = len(v)
    out = []
    for t in range(max(min_parts, 1), n + 1):
        for sizes in compositions(n, t):
            blocks = _blocks(v, sizes)
            outer = tuple((sum(bl, Fraction(0)) - (len(bl) - 1 + a)) / (1 - a) for bl in blocks)
            if not is_j_point(outer, r):
                continue
            rhos = tuple(bl[:-1] + (bl[-1] - (1 - a) * u,) for bl, u in zip(blocks, outer))
            if all(is_j_point(p, a) for p in rhos):
                out.append(GraftDecomposition(outer, rhos))
    return out


def graft_decompositions(v: JPoint, a: RatLike = HALF) -> list[GraftDecomposition]:
    """Every ``(tau, rhos)`` with ``delta_graft(tau, rhos, a) == v`` and t >= 2."""
    a = rat(a)
    if a == 1:
        raise ValueError("graft faces degenerate at a = 1")
    return rel_decompositions(v, a, a)


def j_face_membership(v: JPoint, face: JFaceId, a: RatLike = HALF) -> bool:
    a = rat(a)
    n = len(v)
    if isinstance(face, CoordFace):
        if face.j == 0:
            return in_j0(v, a)
        if not 1 <= face.j <= n:
            raise IndexError(f"coordinate face {face.j} outside 1..{n}")
        return v[face.j - 1] == 0
    if isinstance(face, DeltaFace):
        return any((d.j, d.r, d.t) == (face.j, face.r, face.t) for d in delta_decompositions(v, a))
    if isinstance(face, DeltaZeroFace):
        return any(
            (d.j, d.r, d.t) == (face.k, face.r, face.s) and in_j0(d.rho, a)
            for d in delta_decompositions(v, a)
        )
    if isinstance(face, GraftFace):
        if sum(face.sizes) != n:
            raise IndexError("block sizes do not sum to n")
        return any(tuple(len(p) for p in g.rhos) == face.sizes for g in graft_decompositions(v, a))
    raise TypeError(f"unknown face id {face!r}")


# --- the sweep decomposition ---------------------------------------------

class InJa(NamedTuple):
    point: JPoint


class Graft(NamedTuple):
    outer: JPoint
    rhos: tuple[JPoint, ...]


def sweep_decompose(v: JPoint, b: RatLike, a: RatLike) -> Union[InJa, Graft]:
    """Split J^b(n) into a shifted copy of J^a(n) and delta_rel images.

    Points of height at most ``a`` come from J^a(n) by :func:`shift_embed`;
    the rest are written as ``delta_rel(outer, rhos, a)``.
    """
    a, b = rat(a), rat(b)
    if not 0 <= a <= b <= 1:
        raise ValueError("need 0 <= a <= b <= 1")
    if not is_j_point(v, b):
        raise ValueError(f"{v} is not in J^{b}({len(v)})")
    if height(v) <= a:
        return InJa(tuple(v[:-1]) + (v[-1] - (b - a),))
    ds = rel_decompositions(v, b, a)
    if not ds:
        raise ArithmeticError(f"no sweep decomposition for {v}")
    return Graft(ds[0].tau, ds[0].rhos)


def recompose(piece: Union[InJa, Graft], b: RatLike, a: RatLike) -> JPoint:
    if isinstance(piece, InJa):
        return shift_embed(piece.point, a, b)
    return delta_rel(piece.outer, piece.rhos, a)


# --- sampling -------------------------------------------------------------

@lru_cache(maxsize=None)
def _j_lattice_sorted(n: int) -> tuple:
    from .trees import j_lattice

    return tuple(sorted(j_lattice(n)))


def random_j_point(n: int, rng: random.Random, a: RatLike = HALF, max_den: int = 6) -> JPoint:
    """Random point of J^a(n).

    For a = 1/2 this samples barycentric weights over the half-integer lattice
    vertices.  Other parameters use the affine map between J(n) and J^a(n)
    obtained from the graft structure: a convex mix of a K point shifted up
    by a and a graft of J^a(1) points.
    """
    a = rat(a)
    if a == HALF:
        verts = _j_lattice_sorted(n)
        return barycentric(random_weights(len(verts), rng, max_den), verts)
    from .associahedron import random_k_point

    tau = random_k_point(n, rng, max_den)
    low = shift_embed(tau, 0, a)
    if a == 1:
        return low
    top = delta_graft(random_k_point(n, rng, max_den), [(a,)] * n, a)
    s = Fraction(rng.randint(0, max_den), max_den)
    return tuple(s * x + (1 - s) * y for x, y in zip(low, top))
