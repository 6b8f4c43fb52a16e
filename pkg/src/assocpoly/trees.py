"""Trivalent and bearded trees, their lattice coordinates and word codecs.

Trees are planar and binary; leaves are numbered left to right.  A bearded
tree additionally marks edges with beards so that each path from a leaf down
to the root crosses exactly one beard.  Nodes above the beards are *upper*,
the remaining ones are *lower*.

Words
-----
Trivalent words use reverse Polish notation over ``x<i>`` and ``@``:
``((x1 x2) x3)`` is ``x1x2@x3@``.  The primed variant is Polish:
``@@x1x2x3``.

Bearded words use ``#`` (upper node), ``b`` (lower node) and ``n`` (beard)
as ASCII spellings of the sharp, flat and natural signs, which are also
accepted on input.  A bearded leaf prints as ``x1n``; an upper node with a
beard right below prints as ``w1w2#n``; a lower node prints as ``w1w2b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .ratgeom import RatVec

MAX_TRIVALENT_N = 12
MAX_BEARDED_N = 9

UNICODE = {"#": "♯", "b": "♭", "n": "♮"}
_FROM_UNICODE = {v: k for k, v in UNICODE.items()}


@dataclass(frozen=True)
class Leaf:
    beard: bool = False


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"
    beard: bool = False


Tree = Union[Leaf, Node]


class WordParseError(ValueError):
    """Malformed word; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def leaves(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 1
    return leaves(t.left) + leaves(t.right)


def mirror(t: Tree) -> Tree:
    if isinstance(t, Leaf):
        return t
    return Node(mirror(t.right), mirror(t.left), t.beard)


def strip_beards(t: Tree) -> Tree:
    if isinstance(t, Leaf):
        return Leaf()
    return Node(strip_beards(t.left), strip_beards(t.right))


# --- enumeration ----------------------------------------------------------

@lru_cache(maxsize=None)
def _trivalent(n: int) -> tuple[Tree, ...]:
    if n == 1:
        return (Leaf(),)
    out = []
    for k in range(1, n):
        for left in _trivalent(k):
            for right in _trivalent(n - k):
                out.append(Node(left, right))
    return tuple(out)


def enum_trivalent(n: int) -> list[Tree]:
    """All planar binary trees with n leaves, sorted by their RPN word."""
    if not 1 <= n <= MAX_TRIVALENT_N:
        raise ValueError(f"n must be in 1..{MAX_TRIVALENT_N}")
    return sorted(_trivalent(n), key=word)


def _beardings(t: Tree) -> list[Tree]:
    """All ways to beard ``t`` so every leaf path meets one beard."""
    if isinstance(t, Leaf):
        return [Leaf(True)]
    out = [Node(strip_beards(t.left), strip_beards(t.right), True)]
    for left in _beardings(t.left):
        for right in _beardings(t.right):
            out.append(Node(left, right))
    return out


def enum_bearded(n: int) -> list[Tree]:
    if not 1 <= n <= MAX_BEARDED_N:
        raise ValueError(f"n must be in 1..{MAX_BEARDED_N}")
    out = [b for t in _trivalent(n) for b in _beardings(t)]
    return sorted(out, key=bearded_word)


def count_bearded(n: int) -> int:
    """Number of bearded trees with n leaves, by a recursion on root splits.

    A root either carries the beard (one choice) or passes the condition to
    both subtrees; summing over trees gives ``C_{n-1} + sum_k P(k) P(n-k)``.
    """
    return _count_bearded(n)


@lru_cache(maxsize=None)
def _count_bearded(n: int) -> int:
    if n == 1:
        return 1
    return catalan(n - 1) + sum(_count_bearded(k) * _count_bearded(n - k) for k in range(1, n))


def catalan(m: int) -> int:
    c = 1
    for i in range(m):
        c = c * 2 * (2 * i + 1) // (i + 2)
    return c


def is_bearded(t: Tree) -> bool:
    """Check the one-beard-per-path condition."""
    def state(s: Tree) -> str:
        if isinstance(s, Leaf):
            return "closed" if s.beard else "open"
        a, b = state(s.left), state(s.right)
        if "bad" in (a, b) or a != b:
            return "bad"
        if a == "closed":
            return "bad" if s.beard else "closed"
        return "closed" if s.beard else "open"

    return state(t) == "closed"


def lower_nodes(t: Tree) -> int:
    """Nodes lying below the beards."""
    def go(s: Tree) -> tuple[int, bool]:
        # (lower nodes in s, every leaf path of s already bearded)
        if isinstance(s, Leaf):
            return 0, s.beard
        lc, lb = go(s.left)
        rc, rb = go(s.right)
        lower = lb and rb
        return lc + rc + int(lower), lower or s.beard

    return go(t)[0]


def beards(t: Tree) -> int:
    if isinstance(t, Leaf):
        return int(t.beard)
    return int(t.beard) + beards(t.left) + beards(t.right)


# --- shadows ---------------------------------------------------------------

def shadow_a(t: Tree) -> RatVec:
    """Nodes on the down-left line from each top branch."""
    if isinstance(t, Leaf):
        return (Fraction(0),)
    left, right = shadow_a(t.left), shadow_a(t.right)
    return left + right[:-1] + (right[-1] + 1,)


def shadow_b(t: Tree) -> RatVec:
    """Nodes on the down-right line from each top branch."""
    if isinstance(t, Leaf):
        return (Fraction(0),)
    left, right = shadow_b(t.left), shadow_b(t.right)
    return (left[0] + 1,) + left[1:] + right


# --- trivalent words -------------------------------------------------------

_TOKEN = re.compile(r"x(\d+)|@|#|b|n|\s+")


def _normalise(w: str) -> str:
    return "".join(_FROM_UNICODE.get(ch, ch) for ch in w)


def _tokens(w: str, alphabet: str) -> list[tuple[str, int, int]]:
    """(kind, leaf index or 0, char offset).  ``alphabet`` lists allowed symbols."""
    w = _normalise(w)
    out = []
    pos = 0
    while pos < len(w):
        m = _TOKEN.match(w, pos)
        if m is None:
            raise WordParseError(f"unexpected character {w[pos]!r}", pos)
        text = m.group(0)
        if not text.isspace():
            if m.group(1) is not None:
                out.append(("x", int(m.group(1)), pos))
            elif text in alphabet:
                out.append((text, 0, pos))
            else:
                raise WordParseError(f"symbol {text!r} not allowed here", pos)
        pos = m.end()
    return out


def _check_leaf(idx: int, expected: int, pos: int) -> None:
    if idx != expected:
        raise WordParseError(f"expected x{expected}, found x{idx}", pos)


def word(t: Tree) -> str:
    """RPN word: ``x_i`` for a leaf, ``w1w2@`` for a node."""
    counter = iter(range(1, leaves(t) + 1))

    def go(s: Tree) -> str:
        if isinstance(s, Leaf):
            return f"x{next(counter)}"
        return go(s.left) + go(s.right) + "@"

    return go(t)


def parse_word(w: str) -> Tree:
    stack: list[Tree] = []
    expected = 1
    for kind, idx, pos in _tokens(w, "@"):
        if kind == "x":
            _check_leaf(idx, expected, pos)
            expected += 1
            stack.append(Leaf())
        else:
            if len(stack) < 2:
                raise WordParseError("'@' needs two operands", pos)
            right = stack.pop()
            left = stack.pop()
            stack.append(Node(left, right))
    if len(stack) != 1:
        raise WordParseError(f"{len(stack)} trees left over", len(w))
    return stack[0]


def word_prime(t: Tree) -> str:
    """Polish word: ``@w1'w2'``."""
    counter = iter(range(1, leaves(t) + 1))

    def go(s: Tree) -> str:
        if isinstance(s, Leaf):
            return f"x{next(counter)}"
        return "@" + go(s.left) + go(s.right)

    return go(t)


def parse_word_prime(w: str) -> Tree:
    toks = _tokens(w, "@")
    pos = 0
    expected = [1]

    def go() -> Tree:
        nonlocal pos
        if pos >= len(toks):
            raise WordParseError("word ends before the tree is complete", len(w))
        kind, idx, off = toks[pos]
        pos += 1
        if kind == "x":
            _check_leaf(idx, expected[0], off)
            expected[0] += 1
            return Leaf()
        left = go()
        right = go()
        return Node(left, right)

    t = go()
    if pos != len(toks):
        raise WordParseError("trailing symbols after a complete tree", toks[pos][2])
    return t


def at_counts(w: str) -> RatVec:
    """Number of ``@`` between x_i and x_{i+1} (and after the last leaf)."""
    counts: list[int] = []
    for kind, _, _ in _tokens(w, "@"):
        if kind == "x":
            counts.append(0)
        else:
            counts[-1] += 1
    return tuple(Fraction(c) for c in counts)


# --- bearded words ---------------------------------------------------------

def bearded_word(t: Tree, unicode: bool = False) -> str:
    counter = iter(range(1, leaves(t) + 1))

    def go(s: Tree) -> tuple[str, bool]:
        if isinstance(s, Leaf):
            return f"x{next(counter)}" + ("n" if s.beard else ""), s.beard
        lw, lb = go(s.left)
        rw, rb = go(s.right)
        if lb and rb:
            return lw + rw + "b", True
        return lw + rw + "#" + ("n" if s.beard else ""), s.beard

    out = go(t)[0]
    return "".join(UNICODE.get(c, c) for c in out) if unicode else out


def parse_bearded(w: str) -> Tree:
    """Inverse of :func:`bearded_word`; enforces the beard condition."""
    stack: list[tuple[Tree, bool]] = []
    expected = 1
    for kind, idx, pos in _tokens(w, "#bn"):
        if kind == "x":
            _check_leaf(idx, expected, pos)
            expected += 1
            stack.append((Leaf(), False))
        elif kind == "n":
            if not stack:
                raise WordParseError("beard with nothing below", pos)
            t, closed = stack.pop()
            if closed:
                raise WordParseError("second beard on one path", pos)
            t = Leaf(True) if isinstance(t, Leaf) else Node(t.left, t.right, True)
            stack.append((t, True))
        else:
            if len(stack) < 2:
                raise WordParseError(f"{kind!r} needs two operands", pos)
            (r, rc), (l, lc) = stack.pop(), stack.pop()
            if lc != rc:
                raise WordParseError("subtrees disagree on beards", pos)
            if kind == "#" and lc:
                raise WordParseError("upper node above a beard; expected 'b'", pos)
            if kind == "b" and not lc:
                raise WordParseError("lower node without beards above; expected '#'", pos)
            stack.append((Node(l, r), lc))
    if len(stack) != 1:
        raise WordParseError(f"{len(stack)} trees left over", len(w))
    t, closed = stack[0]
    if not closed:
        raise WordParseError("some path to the root misses a beard", len(w))
    return t


def bearded_word_prime(t: Tree, unicode: bool = False) -> str:
    counter = iter(range(1, leaves(t) + 1))

    def closed(s: Tree) -> bool:
        if s.beard:
            return True
        return not isinstance(s, Leaf) and closed(s.left) and closed(s.right)

    def go(s: Tree) -> str:
        if isinstance(s, Leaf):
            return ("n" if s.beard else "") + f"x{next(counter)}"
        if closed(s.left) and closed(s.right):
            return "b" + go(s.left) + go(s.right)
        return ("n" if s.beard else "") + "#" + go(s.left) + go(s.right)

    out = go(t)
    return "".join(UNICODE.get(c, c) for c in out) if unicode else out


def parse_bearded_prime(w: str) -> Tree:
    toks = _tokens(w, "#bn")
    pos = 0
    expected = 1

    def take() -> tuple[str, int, int]:
        nonlocal pos
        if pos >= len(toks):
            raise WordParseError("word ends before the tree is complete", len(w))
        pos += 1
        return toks[pos - 1]

    def go(covered: bool) -> Tree:
        # covered: a beard already sits between this subtree and the root
        nonlocal expected
        kind, idx, off = take()
        beard = False
        if kind == "n":
            if covered:
                raise WordParseError("second beard on one path", off)
            beard = True
            kind, idx, off = take()
            if kind not in ("x", "#"):
                raise WordParseError("a beard must sit on a leaf or an upper node", off)
        if kind == "x":
            _check_leaf(idx, expected, off)
            expected += 1
            if not (covered or beard):
                raise WordParseError("leaf path misses a beard", off)
            return Leaf(beard)
        if kind == "b":
            if covered:
                raise WordParseError("lower node above a beard; expected '#'", off)
            return Node(go(False), go(False))
        if not (covered or beard):
            raise WordParseError("upper node with no beard below; expected 'b'", off)
        left = go(True)
        right = go(True)
        return Node(left, right, beard)

    t = go(False)
    if pos != len(toks):
        raise WordParseError("trailing symbols after a complete tree", toks[pos][2])
    return t


def _gap_value(sym: str, pos: int, prime: bool) -> Fraction:
    """Decode one gap between leaves into a half-integer."""
    if prime:
        m = re.fullmatch(r"(b*)(n?)(#*)", sym)
        if m is None:
            raise WordParseError(f"gap {sym!r} is not of the form b^l n #^k", pos)
        lows, beard, highs = m.groups()
    else:
        m = re.fullmatch(r"(#*)(n?)(b*)", sym)
        if m is None:
            raise WordParseError(f"gap {sym!r} is not of the form #^k n b^l", pos)
        highs, beard, lows = m.groups()
    if not beard:
        if lows:
            raise WordParseError("lower nodes without a beard in one gap", pos)
        return Fraction(len(highs))
    return len(highs) + Fraction(len(lows) + 1, 2)


def _gaps(w: str, prime: bool) -> list[tuple[str, int]]:
    toks = _tokens(w, "#bn@")
    gaps: list[list] = []
    cur: list = ["", 0]
    for kind, _, pos in toks:
        if kind == "x":
            if prime:
                gaps.append(cur)
                cur = ["", pos]
            else:
                gaps.append(["", pos])
        else:
            if prime:
                cur[0] += kind
            else:
                gaps[-1][0] += kind
    return [(g, p) for g, p in gaps]


def v_coords(t: Tree) -> RatVec:
    """Half-integer coordinates read from the bearded RPN word."""
    return tuple(_gap_value(g, p, False) for g, p in _gaps(bearded_word(t), False))


def u_coords(t: Tree) -> RatVec:
    """Half-integer coordinates read from the bearded Polish word."""
    return tuple(_gap_value(g, p, True) for g, p in _gaps(bearded_word_prime(t), True))


def v_coords_word(w: str) -> RatVec:
    """Coordinates of a bearded RPN word, after checking it parses."""
    parse_bearded(w)
    return tuple(_gap_value(g, p, False) for g, p in _gaps(_normalise(w), False))


# --- lattice sets ------------------------------------------------------------

def k_lattice(n: int) -> set[RatVec]:
    return {shadow_a(t) for t in enum_trivalent(n)}


def k_lattice_dual(n: int) -> set[RatVec]:
    return {shadow_b(t) for t in enum_trivalent(n)}


def j_lattice(n: int) -> set[RatVec]:
    return {v_coords(t) for t in enum_bearded(n)}


def j_lattice_dual(n: int) -> set[RatVec]:
    return {u_coords(t) for t in enum_bearded(n)}
