"""The associahedra K(n) in exact coordinates.

A point of K(n) is a tuple ``u`` of n Fractions with ``u[0] == 0``, every
partial sum ``u_1 + ... + u_j <= j - 1`` for ``j < n`` and total ``n - 1``.
K(1) = {(0)}, K(2) = {(0, 1)} and K(3) is the segment ``(0, t, 2 - t)``.

Boundary insertion ``boundary_insert(rho, tau, j)`` grafts ``tau`` into the
j-th input of ``rho``.  In operator notation it is written d_j(tau)(rho).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .ratgeom import HRep, RatVec, GeometryError, barycentric, vec

KPoint = RatVec


@dataclass(frozen=True)
class KFaceId:
    """The face K_j(r, t) = image of K(r) x K(t) under insertion at j."""

    j: int
    r: int
    t: int

    @property
    def n(self) -> int:
        return self.r + self.t - 1


class FaceDecomposition(NamedTuple):
    j: int
    r: int
    t: int
    rho: KPoint
    tau: KPoint


@lru_cache(maxsize=None)
def k_hrep(n: int) -> HRep:
    """Inequality system of K(n) in R^n."""
    if n < 1:
        raise ValueError("K(n) needs n >= 1")
    e = lambda i: tuple(Fraction(int(k == i)) for k in range(n))
    prefix = lambda j: tuple(Fraction(int(k < j)) for k in range(n))
    eqs = [(e(0), Fraction(0))]
    if n >= 2:
        eqs.append((prefix(n), Fraction(n - 1)))
    ineqs = [(tuple(-c for c in e(i)), Fraction(0)) for i in range(1, n)]
    ineqs += [(prefix(j), Fraction(j - 1)) for j in range(2, n)]
    return HRep(n, tuple(ineqs), tuple(eqs))


def is_k_point(u: Sequence[Fraction]) -> bool:
    n = len(u)
    if n < 1 or u[0] != 0 or any(c < 0 for c in u):
        return False
    s = Fraction(0)
    for j in range(n - 1):
        s += u[j]
        if s > j:
            return False
    return s + u[-1] == n - 1 if n > 1 else True


def as_k_point(u: Sequence) -> KPoint:
    """Validate and normalise; raises ValueError on a non-point."""
    p = vec(*u)
    if not is_k_point(p):
        raise ValueError(f"not a point of K({len(p)}): {p}")
    return p


def insert(outer: Sequence[Fraction], inner: Sequence[Fraction], j: int) -> RatVec:
    """Raw insertion formula shared by every boundary operator.

    ``(v_1..v_{j-1}, u_1..u_{t-1}, u_t + v_j, v_{j+1}..v_r)``.
    """
    r = len(outer)
    if not 1 <= j <= r:
        raise IndexError(f"insertion position {j} outside 1..{r}")
    return tuple(outer[: j - 1]) + tuple(inner[:-1]) + (inner[-1] + outer[j - 1],) + tuple(outer[j:])


def boundary_insert(rho: KPoint, tau: KPoint, j: int) -> KPoint:
    """d_j(rho; tau): graft ``tau`` in K(t) into input j of ``rho`` in K(r).

    Arity-1 factors act as identities, which the formula gives for free.
    """
    return insert(rho, tau, j)


def boundary_insert_dual(rho: KPoint, tau: KPoint, j: int) -> KPoint:
    """The mirrored operator, d'_j = d_{r-j+1}."""
    r = len(rho)
    if not 1 <= j <= r:
        raise IndexError(f"insertion position {j} outside 1..{r}")
    return insert(rho, tau, r - j + 1)


def monoid_product(rho: KPoint, sigma: KPoint) -> KPoint:
    """``rho . sigma``: ``rho`` grafted into the first input of ``sigma``."""
    if len(rho) < 2 or len(sigma) < 2:
        raise ValueError("both factors need arity >= 2")
    return insert(sigma, rho, 1)


def on_boundary(u: KPoint) -> bool:
    """True when ``u`` lies in the union of the codimension-one faces."""
    n = len(u)
    if n < 3:
        return False
    if any(u[j] == 0 for j in range(1, n - 1)):
        return True
    return in_k1_face(u)


def in_k1_face(u: KPoint) -> bool:
    s = Fraction(0)
    for t in range(1, len(u) - 1):
        s += 1 - u[t - 1]
        if u[t] == s:
            return True
    return False


def face_membership(u: KPoint, which: "KFaceId | int") -> bool:
    """Membership in K_j(r, t) (a :class:`KFaceId`) or in K_j(n) (an int j).

    ``K_j(n)`` for ``1 < j < n`` is the hyperplane ``u_j = 0``; ``K_1(n)`` is
    the union of the hyperplanes ``u_t = sum_{i<t} (1 - u_i)``.
    """
    n = len(u)
    if isinstance(which, KFaceId):
        if which.n != n or not 1 <= which.j <= which.r or which.r < 2 or which.t < 2:
            raise IndexError(f"face {which} does not belong to K({n})")
        return any((d.j, d.r, d.t) == (which.j, which.r, which.t) for d in face_decompositions(u))
    j = which
    if j == 1:
        return in_k1_face(u)
    if not 1 < j < n:
        raise IndexError(f"special face index {j} outside 1..{n - 1}")
    return u[j - 1] == 0


def _decompose_at(u: KPoint, j: int, t: int) -> FaceDecomposition | None:
    n = len(u)
    r = n - t + 1
    block = u[j - 1 : j + t - 2]
    T = (t - 1) - sum(block, Fraction(0))
    tau = tuple(block) + (T,)
    vj = u[j + t - 2] - T
    if vj < 0 or not is_k_point(tau):
        return None
    rho = tuple(u[: j - 1]) + (vj,) + tuple(u[j + t - 1 :])
    if not is_k_point(rho):
        return None
    return FaceDecomposition(j, r, t, rho, tau)


def face_decompositions(u: KPoint) -> list[FaceDecomposition]:
    """Every way of writing ``u`` as d_j(rho; tau) with r, t >= 2."""
    return list(_face_decompositions(tuple(u)))


@lru_cache(maxsize=1 << 16)
def _face_decompositions(u: KPoint) -> tuple[FaceDecomposition, ...]:
    n = len(u)
    out = []
    for j in range(1, n):
        for t in range(2, n):
            if j > n - t + 1:
                break
            d = _decompose_at(u, j, t)
            if d is not None:
                out.append(d)
    return tuple(out)


def face_decompose(u: KPoint) -> FaceDecomposition:
    """The decomposition with the smallest ``(j, r)``: leftmost, then outermost."""
    if not is_k_point(u):
        raise ValueError(f"not a point of K({len(u)}): {u}")
    if len(u) < 3:
        raise ValueError("K(n) with n < 3 has no proper faces")
    ds = face_decompositions(u)
    if not ds:
        raise ValueError(f"{u} is an interior point")
    return min(ds, key=lambda d: (d.j, d.r))


def k_vertices(n: int) -> set[KPoint]:
    """Lattice vertices of K(n), produced from trivalent tree shadows."""
    from .trees import k_lattice

    return k_lattice(n)


def pl_vertices(n: int) -> set[KPoint]:
    """Zero-dimensional cells of the face subdivision, built by insertion alone.

    K(2) contributes its single point; every other vertex is an insertion of
    two smaller vertices.  Serves as an oracle independent of the trees.
    """
    return set(_pl_vertices(n))


@lru_cache(maxsize=None)
def _pl_vertices(n: int) -> frozenset:
    if n == 1:
        return frozenset({(Fraction(0),)})
    if n == 2:
        return frozenset({vec(0, 1)})
    out = set()
    for t in range(2, n):
        r = n - t + 1
        for j in range(1, r + 1):
            for rho in _pl_vertices(r):
                for tau in _pl_vertices(t):
                    out.add(insert(rho, tau, j))
    return frozenset(out)


def random_k_point(n: int, rng: random.Random, max_den: int = 6) -> KPoint:
    """Random point: barycentric weights over the lattice vertices."""
    verts = sorted(k_vertices(n))
    return barycentric(random_weights(len(verts), rng, max_den), verts)


def random_weights(k: int, rng: random.Random, max_den: int = 6) -> list[Fraction]:
    """k nonnegative Fractions summing to one, sparse-ish, small denominators."""
    if k == 1:
        return [Fraction(1)]
    support = rng.randint(1, min(k, 4))
    chosen = rng.sample(range(k), support)
    raw = [rng.randint(0, max_den) for _ in chosen]
    if sum(raw) == 0:
        raw[0] = 1
    total = sum(raw)
    w = [Fraction(0)] * k
    for i, x in zip(chosen, raw):
        w[i] = Fraction(x, total)
    return w


__all__ = [
    "KPoint", "KFaceId", "FaceDecomposition", "GeometryError",
    "k_hrep", "is_k_point", "as_k_point", "insert", "boundary_insert",
    "boundary_insert_dual", "monoid_product", "on_boundary", "in_k1_face",
    "face_membership", "face_decompositions", "face_decompose",
    "k_vertices", "pl_vertices", "random_k_point", "random_weights",
]
