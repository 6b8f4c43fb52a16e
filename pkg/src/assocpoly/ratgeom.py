"""Exact rational linear geometry.

Points are plain tuples of :class:`fractions.Fraction`.  Polytopes are given
by an :class:`HRep` (inequalities ``normal . x <= offset`` plus equalities).
Everything here is exact; no floating point is ever involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

Rat = Fraction
RatVec = tuple[Fraction, ...]
RatLike = Union[int, str, Fraction]

MAX_ENUM_DIM = 8


class GeometryError(ValueError):
    """Raised on malformed geometric input."""


class DimensionLimitError(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


def rat(x: RatLike) -> Fraction:
    """Coerce an int, ``"p/q"`` string or Fraction to a Fraction.

    Floats are rejected on purpose.
    """
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass a Fraction or 'p/q' string")
    return Fraction(x)


def vec(*xs: RatLike) -> RatVec:
    """``vec(0, "1/2", 3)`` -> ``(Fraction(0), Fraction(1, 2), Fraction(3))``."""
    if len(xs) == 1 and not isinstance(xs[0], (int, str, Fraction)):
        xs = tuple(xs[0])
    return tuple(rat(x) for x in xs)


def add(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatVec:
    _same_dim(p, q)
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Sequence[Fraction], q: Sequence[Fraction]) -> RatVec:
    _same_dim(p, q)
    return tuple(a - b for a, b in zip(p, q))


def scale(c: RatLike, p: Sequence[Fraction]) -> RatVec:
    c = rat(c)
    return tuple(c * a for a in p)


def dot(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    _same_dim(p, q)
    return sum((a * b for a, b in zip(p, q)), Fraction(0))


def affine(t: RatLike, p: Sequence[Fraction], q: Sequence[Fraction]) -> RatVec:
    """The convex combination ``t*p + (1-t)*q``."""
    t = rat(t)
    _same_dim(p, q)
    return tuple(t * a + (1 - t) * b for a, b in zip(p, q))


def barycentric(weights: Sequence[Fraction], points: Sequence[Sequence[Fraction]]) -> RatVec:
    if len(weights) != len(points) or not points:
        raise GeometryError("need one weight per point")
    if sum(weights) != 1:
        raise GeometryError("weights must sum to 1")
    dim = len(points[0])
    out = [Fraction(0)] * dim
    for w, p in zip(weights, points):
        if len(p) != dim:
            raise GeometryError("points of mixed dimension")
        for i, c in enumerate(p):
            out[i] += w * c
    return tuple(out)


def fmt(p: Sequence[Fraction]) -> str:
    """Render as ``(0, 1/2, 3/2)``."""
    return "(" + ", ".join(str(c) for c in p) + ")"


def _same_dim(p: Sequence, q: Sequence) -> None:
    if len(p) != len(q):
        raise GeometryError(f"dimension mismatch: {len(p)} vs {len(q)}")


Constraint = tuple[RatVec, Fraction]


@dataclass(frozen=True)
class HRep:
    """``{x : a.x <= b for (a, b) in inequalities; a.x == b for (a, b) in equalities}``."""

    dim: int
    inequalities: tuple[Constraint, ...] = ()
    equalities: tuple[Constraint, ...] = ()

    def __post_init__(self):
        for normal, _ in self.inequalities + self.equalities:
            if len(normal) != self.dim:
                raise GeometryError("normal has wrong ambient dimension")

    @classmethod
    def build(
        cls,
        dim: int,
        inequalities: Iterable[tuple[Iterable[RatLike], RatLike]] = (),
        equalities: Iterable[tuple[Iterable[RatLike], RatLike]] = (),
    ) -> "HRep":
        norm = lambda cs: tuple((vec(*a), rat(b)) for a, b in cs)
        return cls(dim, norm(inequalities), norm(equalities))

    def slacks(self, p: Sequence[Fraction]) -> list[Fraction]:
        return [b - dot(a, p) for a, b in self.inequalities]


def contains(h: HRep, p: Sequence[Fraction]) -> bool:
    if len(p) != h.dim:
        raise GeometryError(f"point has dimension {len(p)}, polytope lives in {h.dim}")
    return all(dot(a, p) <= b for a, b in h.inequalities) and all(
        dot(a, p) == b for a, b in h.equalities
    )


def tight(h: HRep, p: Sequence[Fraction]) -> list[int]:
    """Indices of inequalities that hold with equality at ``p``."""
    return [i for i, (a, b) in enumerate(h.inequalities) if dot(a, p) == b]


def ray_exit(h: HRep, center: Sequence[Fraction], through: Sequence[Fraction]) -> tuple[RatVec, Fraction]:
    """Shoot from ``center`` through ``through`` to the boundary of ``h``.

    Returns ``(exit, t)`` with ``through == t*center + (1-t)*exit`` and
    ``0 <= t < 1``.
    """
    center, through = tuple(center), tuple(through)
    if any(s <= 0 for s in h.slacks(center)) or not all(dot(a, center) == b for a, b in h.equalities):
        raise GeometryError("center must lie strictly inside every inequality")
    if not contains(h, through):
        raise GeometryError("through point lies outside the polytope")
    if center == through:
        raise GeometryError("through point coincides with the center")
    d = sub(through, center)
    lam = None
    for a, b in h.inequalities:
        rate = dot(a, d)
        if rate > 0:
            bound = (b - dot(a, center)) / rate
            lam = bound if lam is None else min(lam, bound)
    if lam is None:
        raise UnboundedError("ray never leaves the polytope")
    exit_ = tuple(c + lam * di for c, di in zip(center, d))
    return exit_, (lam - 1) / lam


# --- exact linear algebra -------------------------------------------------

def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [r[:] for r in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    return len(_rref([list(r) for r in rows])[1])


def solve_unique(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], dim: int) -> RatVec | None:
    """Unique solution of ``rows . x = rhs`` or None if singular/inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = _rref(aug)
    if dim in pivots:
        return None
    if len(pivots) < dim:
        return None
    x = [Fraction(0)] * dim
    for row, c in zip(m, pivots):
        x[c] = row[dim]
    return tuple(x)


def nullspace(rows: Sequence[Sequence[Fraction]], dim: int) -> list[RatVec]:
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    m, pivots = _rref([list(r) for r in rows])
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, c in zip(m, pivots):
            v[c] = -row[f]
        basis.append(tuple(v))
    return basis


def _check_bounded(h: HRep) -> None:
    A = [a for a, _ in h.inequalities]
    E = [a for a, _ in h.equalities]
    if rank(A + E) < h.dim:
        raise UnboundedError("system has a lineality direction")
    base = rank(E)
    need = h.dim - 1 - base
    if need < 0:
        return
    for idx in combinations(range(len(A)), need):
        rows = E + [A[i] for i in idx]
        if rank(rows) != h.dim - 1:
            continue
        (d,) = nullspace(rows, h.dim)
        for s in (1, -1):
            ds = scale(s, d)
            if all(dot(a, ds) <= 0 for a in A):
                raise UnboundedError(f"recession direction {fmt(ds)}")


def vertex_enum(h: HRep, max_dim: int = MAX_ENUM_DIM) -> set[RatVec]:
    """Exact vertex set by exhaustive basic-solution enumeration."""
    if h.dim > max_dim:
        raise DimensionLimitError(f"ambient dimension {h.dim} exceeds the limit {max_dim}")
    _check_bounded(h)
    E = [a for a, _ in h.equalities]
    eb = [b for _, b in h.equalities]
    A = [a for a, _ in h.inequalities]
    ab = [b for _, b in h.inequalities]
    need = h.dim - rank(E)
    out: set[RatVec] = set()
    for idx in combinations(range(len(A)), need):
        x = solve_unique(E + [A[i] for i in idx], eb + [ab[i] for i in idx], h.dim)
        if x is not None and contains(h, x):
            out.add(x)
    return out
