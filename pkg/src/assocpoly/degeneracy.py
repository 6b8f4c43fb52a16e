"""The shift map xi and the canonical degeneracies.

``xi`` takes a nonnegative vector and removes a total of at most one unit
from it, front to back, without letting any prefix sum drop below the
running bound ``max_{j<=k}(t_1 + ... + t_j - j) + (k - 1)``.

``d_k(j, sigma)`` and ``d_j(j, rho, a)`` collapse input j of a point of
K(n) or J^a(n); both use the same coordinate formula.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .associahedron import is_k_point
from .multiplihedron import HALF, is_j_point
from .ratgeom import RatLike, RatVec, rat

Degeneracy = Callable[[int, RatVec], RatVec]


def xi(t: Sequence[Fraction]) -> RatVec:
    """The shift map on nonnegative vectors."""
    t = tuple(rat(c) for c in t)
    if not t:
        raise ValueError("xi needs at least one coordinate")
    if any(c < 0 for c in t):
        raise ValueError(f"xi needs nonnegative input, got {t}")
    out = [max(Fraction(0), t[0] - 1)]
    prefix = t[0]
    best = t[0] - 1
    done = out[0]
    for k in range(2, len(t) + 1):
        tk = t[k - 1]
        prefix += tk
        best = max(best, prefix - k)
        tp = min(tk, best - done + (k - 1))
        out.append(tp)
        done += tp
    return tuple(out)


def _collapse(j: int, p: Sequence[Fraction]) -> RatVec:
    n = len(p)
    if n < 2:
        raise ValueError("a degeneracy needs n >= 2")
    if not 1 <= j <= n:
        raise IndexError(f"degeneracy index {j} outside 1..{n}")
    if j == 1:
        return xi(p)[1:]
    tail = xi(p[j - 1 :])
    return tuple(p[: j - 2]) + (p[j - 2] + tail[0],) + tail[1:]


def d_k(j: int, sigma: Sequence[Fraction], check: bool = True) -> RatVec:
    """Canonical degeneracy d^K_j : K(n) -> K(n-1)."""
    if check and not is_k_point(sigma):
        raise ValueError(f"not a point of K({len(sigma)}): {tuple(sigma)}")
    return _collapse(j, sigma)


def d_j(j: int, rho: Sequence[Fraction], a: RatLike = HALF, check: bool = True) -> RatVec:
    """Canonical degeneracy d^{J,a}_j : J^a(n) -> J^a(n-1)."""
    if check and not is_j_point(rho, a):
        raise ValueError(f"not a point of J^{rat(a)}({len(rho)}): {tuple(rho)}")
    return _collapse(j, rho)


def interpolate_degeneracy(
    u: RatLike, d: Degeneracy, d2: Degeneracy, j: int, sigma: RatVec
) -> RatVec:
    """``(1 - u) d_j(sigma) + u d2_j(sigma)``."""
    u = rat(u)
    if not 0 <= u <= 1:
        raise ValueError(f"interpolation weight {u} outside [0, 1]")
    p, q = d(j, sigma), d2(j, sigma)
    return tuple((1 - u) * x + u * y for x, y in zip(p, q))


__all__ = ["xi", "d_k", "d_j", "interpolate_degeneracy", "Degeneracy"]
