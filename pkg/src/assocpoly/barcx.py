"""Two-sided bar constructions over finite monoids, as explicit cell complexes.

A cell of rank r is ``(y; x_1, ..., x_r; z)`` with ``y`` and ``z`` either
monoid elements or ``STAR``; its carrier is K(r + 2).  Input 1 of the carrier
carries ``y``, inputs 2..r+1 carry the ``x_i`` and input r+2 carries ``z``.

A point ``d_k(rho; tau)`` on the boundary is identified with ``rho`` in the
cell whose labels have the block of inputs ``k .. k + t - 1`` multiplied
together.  A block touching a ``STAR`` end collapses to ``STAR``.  In the
strict model a middle label equal to the unit is removed, and the point is
moved by the canonical degeneracy ``d^K_{i+1}``.

The primed model uses the same cells over J_0(r + 2); :func:`primed_point`
moves points across with omega.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Optional, Sequence

from .associahedron import KPoint, face_decompositions, is_k_point
from .degeneracy import d_j, d_k
from .homeo import alpha, omega
from .multiplihedron import HALF, JPoint, delta_decompositions, in_j0, is_j_point
from .associahedron import boundary_insert

STAR = None
HOPF, STRICT = "hopf", "strict"
MAX_BAR_RANK = 8


class MonoidError(ValueError):
    """A table that fails a monoid axiom; ``instance`` names the failing case."""

    def __init__(self, msg: str, instance: tuple = ()):
        super().__init__(msg)
        self.instance = instance


@dataclass(frozen=True)
class FiniteMonoid:
    elements: tuple[str, ...]
    table: tuple[tuple[str, ...], ...]
    unit: str

    @classmethod
    def from_table(cls, elements: Sequence[str], rows: Sequence[Sequence[str]]) -> "FiniteMonoid":
        elements = tuple(elements)
        if len(set(elements)) != len(elements) or not elements:
            raise MonoidError("element names must be distinct and nonempty")
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != len(elements) or any(len(r) != len(elements) for r in rows):
            raise MonoidError("table must be square with one row per element")
        for r in rows:
            for c in r:
                if c not in elements:
                    raise MonoidError(f"table entry {c!r} is not an element", (c,))
        idx = {e: i for i, e in enumerate(elements)}
        mul = lambda a, b: rows[idx[a]][idx[b]]
        units = [u for u in elements if all(mul(u, x) == x == mul(x, u) for x in elements)]
        if not units:
            raise MonoidError("no two-sided unit", ())
        for a, b, c in product(elements, repeat=3):
            if mul(mul(a, b), c) != mul(a, mul(b, c)):
                raise MonoidError(f"not associative: ({a}{b}){c} != {a}({b}{c})", (a, b, c))
        return cls(elements, rows, units[0])

    @classmethod
    def parse(cls, text: str) -> "FiniteMonoid":
        """Read ``elements: e g`` / ``table: e g / g e``."""
        fields = {}
        for line in text.strip().splitlines():
            if not line.strip():
                continue
            if ":" not in line:
                raise MonoidError(f"expected 'key: value', got {line!r}")
            k, v = line.split(":", 1)
            fields[k.strip().lower()] = v.strip()
        if "elements" not in fields or "table" not in fields:
            raise MonoidError("need both 'elements:' and 'table:' lines")
        elements = fields["elements"].split()
        rows = [r.split() for r in fields["table"].split("/")]
        return cls.from_table(elements, rows)

    def to_text(self) -> str:
        return "elements: " + " ".join(self.elements) + "\ntable: " + " / ".join(" ".join(r) for r in self.table)

    def mul(self, a: str, b: str) -> str:
        i, j = self.elements.index(a), self.elements.index(b)
        return self.table[i][j]

    def prod(self, xs: Iterable[str]) -> str:
        return reduce(self.mul, xs, self.unit)

    @property
    def order(self) -> int:
        return len(self.elements)


def cyclic(n: int) -> FiniteMonoid:
    names = ["e"] + [f"g{k}" if n > 2 else "g" for k in range(1, n)]
    rows = [[names[(i + j) % n] for j in range(n)] for i in range(n)]
    return FiniteMonoid.from_table(names, rows)


BUILTINS = {
    "c2": lambda: cyclic(2),
    "c3": lambda: cyclic(3),
    "triv": lambda: cyclic(1),
}


def builtin(name: str) -> FiniteMonoid:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise MonoidError(f"unknown builtin monoid {name!r}; choose from {sorted(BUILTINS)}") from None


# --- cells ----------------------------------------------------------------

@dataclass(frozen=True)
class BarCell:
    y: Optional[str]
    xs: tuple[str, ...]
    z: Optional[str]

    @property
    def rank(self) -> int:
        return len(self.xs)

    @property
    def inputs(self) -> tuple:
        return (self.y,) + self.xs + (self.z,)

    def __str__(self) -> str:
        show = lambda v: "*" if v is None else v
        return f"[{show(self.y)}; {' '.join(self.xs)}; {show(self.z)}]"


def multiply_block(cell: BarCell, j: int, t: int, monoid: FiniteMonoid) -> BarCell:
    """Labels after multiplying inputs ``j .. j+t-1`` (1-based)."""
    ins = list(cell.inputs)
    block = ins[j - 1 : j - 1 + t]
    val = None if any(v is None for v in block) else monoid.prod(block)
    new = ins[: j - 1] + [val] + ins[j - 1 + t :]
    return BarCell(new[0], tuple(new[1:-1]), new[-1])


def _unit_positions(cell: BarCell, monoid: FiniteMonoid) -> list[int]:
    return [i for i, x in enumerate(cell.xs, start=1) if x == monoid.unit]


def collapse_unit(sigma: KPoint, cell: BarCell, i: int) -> tuple[KPoint, BarCell]:
    """Drop ``x_i`` and move the point by ``d^K_{i+1}``."""
    xs = cell.xs[: i - 1] + cell.xs[i:]
    return d_k(i + 1, sigma, check=False), BarCell(cell.y, xs, cell.z)


def _steps(sigma: KPoint, cell: BarCell, monoid: FiniteMonoid, model: str):
    """Every single rewrite available at ``(sigma, cell)``."""
    if model == STRICT:
        units = _unit_positions(cell, monoid)
        if units:
            return [collapse_unit(sigma, cell, i) for i in units]
    if len(sigma) < 3:
        return []
    return [(d.rho, multiply_block(cell, d.j, d.t, monoid)) for d in face_decompositions(sigma)]


def normal_form(
    sigma: Sequence[Fraction], cell: BarCell, monoid: FiniteMonoid, model: str = STRICT
) -> tuple[KPoint, BarCell]:
    """Rewrite until the point is interior and (strict model) no label is the unit."""
    sigma = tuple(sigma)
    _check(sigma, cell, monoid, model)
    while True:
        steps = _steps(sigma, cell, monoid, model)
        if not steps:
            return sigma, cell
        sigma, cell = steps[0]


def all_normal_forms(
    sigma: Sequence[Fraction], cell: BarCell, monoid: FiniteMonoid, model: str = STRICT
) -> set[tuple[KPoint, BarCell]]:
    """Terminal results over every rewrite order (confluence means one element)."""
    sigma = tuple(sigma)
    _check(sigma, cell, monoid, model)
    seen: dict = {}

    def go(s, c):
        key = (s, c)
        if key in seen:
            return seen[key]
        steps = _steps(s, c, monoid, model)
        out = {key} if not steps else set().union(*(go(s2, c2) for s2, c2 in steps))
        seen[key] = out
        return out

    return go(sigma, cell)


def _check(sigma: KPoint, cell: BarCell, monoid: FiniteMonoid, model: str) -> None:
    if model not in (HOPF, STRICT):
        raise ValueError(f"unknown model {model!r}")
    if len(sigma) != cell.rank + 2 or not is_k_point(sigma):
        raise ValueError(f"{sigma} is not a point of K({cell.rank + 2})")
    for v in cell.inputs:
        if v is not None and v not in monoid.elements:
            raise ValueError(f"label {v!r} is not an element of the monoid")


# --- complexes ------------------------------------------------------------

@dataclass(frozen=True)
class Attachment:
    face: tuple[int, int, int]  # (k, r, t): the image of K(r) x K(t) under insertion at k
    target: BarCell
    collapsed: tuple[int, ...]  # unit labels removed after multiplying, as an index list


@dataclass
class BarComplex:
    monoid: FiniteMonoid
    model: str
    level: int
    ends: tuple[bool, bool]  # (Y == X, Z == X)
    cells: dict[int, list[BarCell]]
    attachments: dict[BarCell, list[Attachment]]
    carrier: str = "K"

    def counts(self) -> list[int]:
        return [len(self.cells.get(r, [])) for r in range(self.level + 1)]

    def all_cells(self) -> list[BarCell]:
        return [c for r in sorted(self.cells) for c in self.cells[r]]

    def to_json(self) -> str:
        show = lambda v: "*" if v is None else v
        enc = lambda c: {"y": show(c.y), "xs": list(c.xs), "z": show(c.z)}
        data = {
            "monoid": {"elements": list(self.monoid.elements), "table": [list(r) for r in self.monoid.table]},
            "model": self.model,
            "carrier": self.carrier,
            "level": self.level,
            "counts": self.counts(),
            "euler": euler(self),
            "cells": [
                {
                    "rank": c.rank,
                    **enc(c),
                    "attachments": [
                        {"face": list(a.face), "target": enc(a.target), "collapsed": list(a.collapsed)}
                        for a in self.attachments.get(c, [])
                    ],
                }
                for c in self.all_cells()
            ],
        }
        return json.dumps(data, indent=1)


def _labels(monoid: FiniteMonoid, model: str) -> list[str]:
    if model == STRICT:
        return [x for x in monoid.elements if x != monoid.unit]
    return list(monoid.elements)


def cells_of_rank(r: int, monoid: FiniteMonoid, model: str, y_is_x: bool, z_is_x: bool) -> list[BarCell]:
    ys = list(monoid.elements) if y_is_x else [STAR]
    zs = list(monoid.elements) if z_is_x else [STAR]
    return [BarCell(y, xs, z) for y in ys for xs in product(_labels(monoid, model), repeat=r) for z in zs]


def face_attachment(cell: BarCell, k: int, r: int, t: int, monoid: FiniteMonoid, model: str) -> Attachment:
    """Where the face K_k(r, t) of ``cell`` is glued."""
    target = multiply_block(cell, k, t, monoid)
    gone = _unit_positions(target, monoid) if model == STRICT else []
    if gone:
        xs = tuple(x for i, x in enumerate(target.xs, 1) if i not in gone)
        target = BarCell(target.y, xs, target.z)
    return Attachment((k, r, t), target, tuple(gone))


def build_bar(
    monoid: FiniteMonoid, n: int, model: str = STRICT, y_is_x: bool = False, z_is_x: bool = False
) -> BarComplex:
    """The filtration stage B_n(Y, X, Z); Y and Z are X when the flags are set, else a point."""
    if not 0 <= n <= MAX_BAR_RANK:
        raise ValueError(f"bar filtration level {n} outside 0..{MAX_BAR_RANK}")
    if model not in (HOPF, STRICT):
        raise ValueError(f"unknown model {model!r}")
    cells = {r: cells_of_rank(r, monoid, model, y_is_x, z_is_x) for r in range(n + 1)}
    att = {}
    for r, cs in cells.items():
        N = r + 2
        faces = [(k, N - t + 1, t) for t in range(2, N) for k in range(1, N - t + 2)]
        for c in cs:
            att[c] = [face_attachment(c, k, rr, t, monoid, model) for k, rr, t in faces]
    return BarComplex(monoid, model, n, (y_is_x, z_is_x), cells, att)


def euler(bc: BarComplex) -> int:
    return sum((-1) ** r * len(cs) for r, cs in bc.cells.items())


# --- projective filtration -----------------------------------------------

@dataclass
class ProjectiveFiltration:
    n: int
    E: list[BarCell]
    P: list[BarCell]
    D: list[BarCell]

    @staticmethod
    def p(cell: BarCell) -> BarCell:
        """E^n -> P^{n-1}: forget the left label."""
        return BarCell(STAR, cell.xs, cell.z)

    @staticmethod
    def q(cell: BarCell) -> BarCell:
        """D^n -> P^n: forget the left label (the unit on the new cells)."""
        return BarCell(STAR, cell.xs, cell.z)


def projective_filtration(monoid: FiniteMonoid, n: int, model: str = STRICT) -> ProjectiveFiltration:
    """E^n = B_{n-1}(X, X, *), P^n = B_n(*, X, *), D^n = E^n plus rank-n cells [e; x; *]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    E = build_bar(monoid, n - 1, model, y_is_x=True).all_cells() if n >= 1 else []
    P = build_bar(monoid, n, model).all_cells()
    top = [BarCell(monoid.unit, xs, STAR) for xs in product(_labels(monoid, model), repeat=n)]
    return ProjectiveFiltration(n, E, P, E + top)


def d_identification(
    sigma: KPoint, cell: BarCell, monoid: FiniteMonoid, model: str = STRICT
) -> tuple[KPoint, BarCell]:
    """Glue a boundary point of a top D-cell ``[e; x; *]`` into E^{r-1}.

    The face ``d_k(rho; tau)`` of K(n+2) goes to ``rho`` in K(r), so the target
    has rank r - 2 and lies in E^{r-1}.
    """
    if cell.y != monoid.unit or cell.z is not None:
        raise ValueError("D-cells carry the unit on the left and a point on the right")
    return normal_form(sigma, cell, monoid, model)


# --- primed model --------------------------------------------------------

def primed_point(sigma: KPoint) -> JPoint:
    return omega(HALF, sigma)


def primed_steps(x: JPoint, cell: BarCell, monoid: FiniteMonoid, model: str):
    if model == STRICT:
        units = _unit_positions(cell, monoid)
        if units:
            i = units[0]
            xs = cell.xs[: i - 1] + cell.xs[i:]
            return [(d_j(i + 1, x, check=False), BarCell(cell.y, xs, cell.z))]
    if len(x) < 3:
        return []
    return [
        (d.rho, multiply_block(cell, d.j, d.t, monoid))
        for d in delta_decompositions(x)
        if d.r >= 2 and in_j0(d.rho)
    ]


def primed_normal_form(x: JPoint, cell: BarCell, monoid: FiniteMonoid, model: str = HOPF) -> tuple[JPoint, BarCell]:
    """Normal form over the J_0 carriers."""
    x = tuple(x)
    if len(x) != cell.rank + 2 or not (is_j_point(x) and in_j0(x)):
        raise ValueError(f"{x} is not a point of J_0({cell.rank + 2})")
    while True:
        steps = primed_steps(x, cell, monoid, model)
        if not steps:
            return x, cell
        x, cell = steps[0]


def primed_model(bc: BarComplex) -> BarComplex:
    """Same cells and gluing data over J_0 carriers; omega identifies the two."""
    return BarComplex(bc.monoid, bc.model, bc.level, bc.ends, bc.cells, bc.attachments, carrier="J0")


def map_cell(cell: BarCell, f: dict[str, str]) -> BarCell:
    g = lambda v: None if v is None else f[v]
    return BarCell(g(cell.y), tuple(f[x] for x in cell.xs), g(cell.z))


def is_homomorphism(f: dict[str, str], src: FiniteMonoid, dst: FiniteMonoid) -> bool:
    if f.get(src.unit) != dst.unit:
        return False
    return all(f[src.mul(a, b)] == dst.mul(f[a], f[b]) for a in src.elements for b in src.elements)


def generic_face_point(k: int, r: int, t: int) -> KPoint:
    """An interior point of the face K_k(r, t)."""
    return boundary_insert(alpha(1, r), alpha(1, t), k)


__all__ = [
    "STAR", "HOPF", "STRICT", "MonoidError", "FiniteMonoid", "cyclic", "builtin", "BUILTINS",
    "BarCell", "multiply_block", "collapse_unit", "normal_form", "all_normal_forms",
    "Attachment", "BarComplex", "cells_of_rank", "face_attachment", "build_bar", "euler",
    "ProjectiveFiltration", "projective_filtration", "d_identification", "primed_point",
    "primed_normal_form", "primed_model", "map_cell", "is_homomorphism", "generic_face_point",
]
