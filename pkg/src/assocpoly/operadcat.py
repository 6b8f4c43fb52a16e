"""Operadic categories built from K and J, as finite formal data.

Objects are ``Obj(n)`` (plain) and ``Obj(n, primed=True)``.  A tuple morphism
``m -> n`` is a list of ``m + 2`` points whose arities add up to ``n + 2``:

* K tuples go ``m -> n`` or ``m' -> n'``;
* J tuples go ``m -> n'``;
* nothing goes from a primed object to a plain one.

Every composition and every action uses the same block rule: the ``i``-th
factor of the inner morphism receives the next ``arity_i`` factors of the
outer morphism in its inputs (:func:`multiplihedron.delta_rel`).  The level
of the grafted factors is 0 for K tuples and 1/2 for J tuples.

The unit-augmented categories add index lists ``(i_1 < ... < i_k)``.  Such a
list deletes the inputs ``i_a + 1`` of the source.  Morphisms there are
kept in the normal form ``tuple o indexlist``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .associahedron import is_k_point, random_k_point
from .degeneracy import d_j, d_k
from .multiplihedron import HALF, compositions, delta_rel, in_j0, is_j_point, random_j_point
from .ratgeom import RatVec

KBAR, J0BAR, JBAR = "Kbar", "J0bar", "Jbar"
KBREVE, J0BREVE, JBREVE = "Kbreve", "J0breve", "Jbreve"
REPRESENTATIONS = (KBAR, J0BAR, JBAR, KBREVE, J0BREVE, JBREVE)


class CompositionError(ValueError):
    """Morphisms that cannot be composed or applied."""


@dataclass(frozen=True, order=True)
class Obj:
    n: int
    primed: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("objects are nonnegative integers")

    def __str__(self) -> str:
        return f"{self.n}'" if self.primed else str(self.n)


@dataclass(frozen=True)
class TupleMorphism:
    """A tuple of K points (``kind='K'``) or J points (``kind='J'``)."""

    source: Obj
    target: Obj
    parts: tuple[RatVec, ...]
    kind: str = "K"

    def __post_init__(self):
        if self.kind not in ("K", "J"):
            raise ValueError(f"unknown tuple kind {self.kind!r}")
        if len(self.parts) != self.source.n + 2:
            raise CompositionError(f"{len(self.parts)} factors for source {self.source}")
        if sum(len(p) for p in self.parts) != self.target.n + 2:
            raise CompositionError(f"arities do not add up to {self.target.n} + 2")
        if self.kind == "K":
            if self.source.primed != self.target.primed:
                raise CompositionError("K tuples keep the object type")
            if not all(is_k_point(p) for p in self.parts):
                raise CompositionError("K tuple with a non-K factor")
        else:
            if self.source.primed or not self.target.primed:
                raise CompositionError("J tuples go from a plain to a primed object")
            if not all(is_j_point(p, HALF) for p in self.parts):
                raise CompositionError("J tuple with a non-J factor")

    @property
    def level(self) -> Fraction:
        return Fraction(0) if self.kind == "K" else HALF

    @property
    def arities(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def KMorphism(m: int, n: int, parts: Sequence[RatVec], primed: bool = False) -> TupleMorphism:
    return TupleMorphism(Obj(m, primed), Obj(n, primed), tuple(tuple(p) for p in parts), "K")


def JMorphism(m: int, n: int, parts: Sequence[RatVec]) -> TupleMorphism:
    return TupleMorphism(Obj(m), Obj(n, True), tuple(tuple(p) for p in parts), "J")


def identity(obj: Obj) -> TupleMorphism:
    return TupleMorphism(obj, obj, ((Fraction(0),),) * (obj.n + 2), "K")


@dataclass(frozen=True)
class DegIndexList:
    """``(i_1 < ... < i_k) : m -> m - k`` deleting inputs ``i_a + 1``."""

    source: Obj
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = self.indices
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise CompositionError(f"indices {idx} are not strictly increasing")
        if idx and not (1 <= idx[0] and idx[-1] <= self.source.n):
            raise CompositionError(f"indices {idx} outside 1..{self.source.n}")

    @property
    def target(self) -> Obj:
        return Obj(self.source.n - len(self.indices), self.source.primed)


@dataclass(frozen=True)
class UnitalMorphism:
    """``tup o deg`` in the unit-augmented categories."""

    tup: TupleMorphism
    deg: DegIndexList = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.deg is None:
            object.__setattr__(self, "deg", DegIndexList(self.tup.source, ()))
        if self.deg.target != self.tup.source:
            raise CompositionError("index list target differs from tuple source")

    @property
    def source(self) -> Obj:
        return self.deg.source

    @property
    def target(self) -> Obj:
        return self.tup.target


Morphism = Union[TupleMorphism, DegIndexList, UnitalMorphism]


# --- composition ----------------------------------------------------------

def compose(g: TupleMorphism, f: TupleMorphism) -> TupleMorphism:
    """``g o f`` (apply f first)."""
    if f.target != g.source:
        raise CompositionError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    if f.kind == "J" and g.kind == "J":
        raise CompositionError("J tuples never compose with each other")
    parts = []
    s = 0
    for rho in f.parts:
        block = g.parts[s : s + len(rho)]
        parts.append(delta_rel(rho, block, g.level))
        s += len(rho)
    kind = "J" if "J" in (f.kind, g.kind) else "K"
    return TupleMorphism(f.source, g.target, tuple(parts), kind)


def compose_k(g: TupleMorphism, f: TupleMorphism) -> TupleMorphism:
    if g.kind != "K" or f.kind != "K":
        raise CompositionError("compose_k takes two K tuples")
    return compose(g, f)


def compose_j(g: TupleMorphism, f: TupleMorphism) -> TupleMorphism:
    """Composition inside the J category (any admissible pair)."""
    return compose(g, f)


def compose_mixed(g: TupleMorphism, f: TupleMorphism) -> TupleMorphism:
    if g.kind == f.kind:
        raise CompositionError("compose_mixed takes one K tuple and one J tuple")
    return compose(g, f)


def compose_deg(i: DegIndexList, j: DegIndexList) -> DegIndexList:
    """``i o j`` for index lists: ``j`` deletes first, ``i`` indexes what is left."""
    if j.target != i.source:
        raise CompositionError("index lists are not composable")
    js = j.indices
    shifted = []
    for ia in i.indices:
        b = 0
        while b < len(js) and js[b] - b <= ia:
            b += 1
        shifted.append(ia + b)
    return DegIndexList(j.source, tuple(sorted(set(js) | set(shifted))))


def deletion_semantics(lst: DegIndexList) -> tuple[int, ...]:
    """Surviving original inputs ``2..m+1`` after deleting ``i_a + 1``."""
    drop = {i + 1 for i in lst.indices}
    return tuple(p for p in range(2, lst.source.n + 2) if p not in drop)


def push_deg(i: int, tup: TupleMorphism) -> tuple[TupleMorphism, DegIndexList]:
    """Rewrite ``(i) o tup`` as ``tup' o residual``."""
    n = tup.target.n
    if not 1 <= i <= n:
        raise CompositionError(f"index {i} outside 1..{n}")
    pos = i + 1
    acc = 0
    for jb, part in enumerate(tup.parts):
        if pos <= acc + len(part):
            ip = pos - acc
            break
        acc += len(part)
    parts = list(tup.parts)
    new_target = Obj(n - 1, tup.target.primed)
    if len(parts[jb]) > 1:
        part = parts[jb]
        parts[jb] = d_k(ip, part) if tup.kind == "K" else d_j(ip, part)
        return TupleMorphism(tup.source, new_target, tuple(parts), tup.kind), DegIndexList(tup.source, ())
    del parts[jb]
    src = tup.source
    new_src = Obj(src.n - 1, src.primed)
    return TupleMorphism(new_src, new_target, tuple(parts), tup.kind), DegIndexList(src, (jb,))


def push_list(lst: DegIndexList, tup: TupleMorphism) -> tuple[TupleMorphism, DegIndexList]:
    """Rewrite ``lst o tup`` as ``tup' o residual``."""
    if lst.source != tup.target:
        raise CompositionError("index list does not start at the tuple target")
    residual = DegIndexList(tup.source, ())
    cur = tup
    for i in reversed(lst.indices):
        cur, r = push_deg(i, cur)
        residual = compose_deg(r, residual)
    return cur, residual


def compose_unital(g: Morphism, f: Morphism) -> UnitalMorphism:
    """Composition in the unit-augmented categories, returned in normal form."""
    g, f = as_unital(g), as_unital(f)
    if f.target != g.source:
        raise CompositionError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    moved, residual = push_list(g.deg, f.tup)
    return UnitalMorphism(compose(g.tup, moved), compose_deg(residual, f.deg))


def as_unital(m: Morphism) -> UnitalMorphism:
    if isinstance(m, UnitalMorphism):
        return m
    if isinstance(m, TupleMorphism):
        return UnitalMorphism(m)
    if isinstance(m, DegIndexList):
        return UnitalMorphism(identity(m.target), m)
    raise TypeError(f"not a morphism: {m!r}")


# --- representations ------------------------------------------------------

def _check_carrier(obj: Obj, x: RatVec, j0: bool) -> None:
    size = obj.n + 2
    if len(x) != size:
        raise CompositionError(f"carrier of {obj} has dimension {size}, got {len(x)}")
    if obj.primed or j0:
        if not is_j_point(x, HALF) or (j0 and not in_j0(x, HALF)):
            raise CompositionError(f"{x} is not in the carrier of {obj}")
    elif not is_k_point(x):
        raise CompositionError(f"{x} is not in K({size})")


def _act_tuple(t: TupleMorphism, x: RatVec) -> RatVec:
    return delta_rel(x, t.parts, t.level)


def _act_deg(lst: DegIndexList, x: RatVec, j_carrier: bool) -> RatVec:
    for i in reversed(lst.indices):
        x = d_j(i + 1, x) if j_carrier else d_k(i + 1, x)
    return x


def rep_apply(rep: str, morphism: Morphism, x: Sequence[Fraction]) -> RatVec:
    """Act by ``morphism`` on ``x`` in one of the six canonical representations."""
    if rep not in REPRESENTATIONS:
        raise ValueError(f"unknown representation {rep!r}")
    x = tuple(x)
    unital = rep in (KBREVE, J0BREVE, JBREVE)
    j0 = rep in (J0BAR, J0BREVE)
    with_primes = rep in (JBAR, JBREVE)
    if not unital and not isinstance(morphism, TupleMorphism):
        raise CompositionError(f"{rep} has no index-list morphisms")
    m = as_unital(morphism)
    for obj in (m.source, m.target):
        if obj.primed and not with_primes:
            raise CompositionError(f"{rep} has no primed objects")
    if m.tup.kind == "J" and not with_primes:
        raise CompositionError(f"{rep} has no J tuples")
    _check_carrier(m.source, x, j0)
    # J0 carriers are J points acted on by delta chains, like primed objects.
    j_src = m.source.primed or j0
    return _act_tuple(m.tup, _act_deg(m.deg, x, j_src))


# --- random generation ----------------------------------------------------

def random_tuple(
    rng: random.Random, m: int, n: int, kind: str = "K", primed: bool = False, max_den: int = 4
) -> TupleMorphism:
    """Uniformly chosen arity pattern, random factors."""
    if n < m:
        raise ValueError("tuple morphisms need n >= m")
    arities = [a for a in compositions(n + 2, m + 2)]
    pattern = rng.choice(arities)
    if kind == "K":
        parts = [random_k_point(a, rng, max_den) for a in pattern]
        return KMorphism(m, n, parts, primed)
    parts = [random_j_point(a, rng, HALF, max_den) for a in pattern]
    return JMorphism(m, n, parts)


def random_deg(rng: random.Random, source: Obj, k: int | None = None) -> DegIndexList:
    if k is None:
        k = rng.randint(0, source.n)
    idx = tuple(sorted(rng.sample(range(1, source.n + 1), k)))
    return DegIndexList(source, idx)


__all__ = [
    "Obj", "TupleMorphism", "KMorphism", "JMorphism", "identity", "DegIndexList",
    "UnitalMorphism", "CompositionError", "compose", "compose_k", "compose_j",
    "compose_mixed", "compose_deg", "deletion_semantics", "push_deg", "push_list",
    "compose_unital", "as_unital", "rep_apply", "random_tuple", "random_deg",
    "REPRESENTATIONS", "KBAR", "J0BAR", "JBAR", "KBREVE", "J0BREVE", "JBREVE",
]
