"""Command-line entry point: ``assocpoly {polytope,trees,verify,bar}``.

Exit codes: 0 success, 1 failed verification, 2 bad flags, 3 size limit,
4 word parse error, 5 invalid monoid table.  Numbers print as ``p/q``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from functools import cmp_to_key
from pathlib import Path
from typing import Sequence

from . import barcx as bx
from . import trees as tr
from .associahedron import KFaceId, face_membership, k_hrep
from .multiplihedron import HALF, DeltaFace, GraftFace, compositions, j_face_membership, j_hrep
from .ratgeom import MAX_ENUM_DIM, HRep, dot, fmt, rank, sub, vertex_enum
from .suites import SUITES, run_suite

EXIT_VERIFY, EXIT_FLAGS, EXIT_SIZE, EXIT_PARSE, EXIT_MONOID = 1, 2, 3, 4, 5
MAX_OFF_DIM = 3
MAX_VERIFY_N = 12


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# --- polytope -------------------------------------------------------------

def _parse_level(text: str) -> Fraction:
    try:
        a = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise CliError(EXIT_FLAGS, f"--a expects a rational p/q, got {text!r}") from None
    if not 0 <= a <= 1:
        raise CliError(EXIT_FLAGS, f"--a must lie in [0, 1], got {a}")
    return a


def polytope_data(family: str, n: int, a: Fraction | None) -> tuple[HRep, list[tuple[Fraction, ...]]]:
    """Inequalities and vertex list (tree lattice points where they exist)."""
    if n < 1:
        raise CliError(EXIT_FLAGS, "--n must be at least 1")
    if family == "k":
        if n > tr.MAX_TRIVALENT_N:
            raise CliError(EXIT_SIZE, f"K({n}) exceeds the enumeration limit n <= {tr.MAX_TRIVALENT_N}")
        return k_hrep(n), sorted(tr.k_lattice(n))
    h = j_hrep(n, a)
    if a == HALF:
        if n > tr.MAX_BEARDED_N:
            raise CliError(EXIT_SIZE, f"J({n}) exceeds the enumeration limit n <= {tr.MAX_BEARDED_N}")
        return h, sorted(tr.j_lattice(n))
    if n > MAX_ENUM_DIM:
        raise CliError(EXIT_SIZE, f"vertex enumeration is limited to n <= {MAX_ENUM_DIM}")
    return h, sorted(vertex_enum(h))


def _rat_list(v) -> list[str]:
    return [str(c) for c in v]


def polytope_json(family: str, n: int, a: Fraction | None, h: HRep, verts) -> str:
    enc = lambda cs: [{"normal": _rat_list(nrm), "rhs": str(b)} for nrm, b in cs]
    data = {
        "family": family.upper(),
        "n": n,
        "a": None if a is None else str(a),
        "vertices": [_rat_list(v) for v in verts],
        "hrep": {"dim": h.dim, "inequalities": enc(h.inequalities), "equalities": enc(h.equalities)},
    }
    return json.dumps(data, indent=1)


def load_polytope_json(text: str) -> tuple[str, int, Fraction | None, list, HRep]:
    """Inverse of :func:`polytope_json`."""
    d = json.loads(text)
    dec = lambda cs: [([Fraction(x) for x in c["normal"]], Fraction(c["rhs"])) for c in cs]
    h = HRep.build(d["hrep"]["dim"], dec(d["hrep"]["inequalities"]), dec(d["hrep"]["equalities"]))
    verts = [tuple(Fraction(x) for x in v) for v in d["vertices"]]
    a = None if d["a"] is None else Fraction(d["a"])
    return d["family"].lower(), d["n"], a, verts, h


def _chart(family: str, a: Fraction | None, v) -> tuple[Fraction, ...]:
    """Affine coordinates: drop the coordinates fixed by the equalities."""
    if family == "k" or a == 0:
        return tuple(v[1:-1])
    return tuple(v[:-1])


def _cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _cyclic(points2d: list[tuple[Fraction, Fraction]]) -> list[int]:
    """Exact counterclockwise order around the centroid."""
    m = len(points2d)
    cx = sum(p[0] for p in points2d) / m
    cy = sum(p[1] for p in points2d) / m
    rel = [(p[0] - cx, p[1] - cy) for p in points2d]
    half = lambda p: 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1

    def cmp(i, j):
        p, q = rel[i], rel[j]
        if half(p) != half(q):
            return half(p) - half(q)
        c = p[0] * q[1] - p[1] * q[0]
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(range(m), key=cmp_to_key(cmp))


def _facet_sets(family: str, n: int, a, h: HRep, verts, P) -> list[list[int]]:
    """Vertex index sets of the facets, in candidate order.

    Tree lattice points are matched against the combinatorial faces (images
    of the insertion maps), which subdivide the flat facets of the
    inequality system; other levels use the inequalities directly.
    """
    if family == "k":
        preds = [
            (lambda v, f=KFaceId(j, n - t + 1, t): face_membership(v, f))
            for t in range(2, n)
            for j in range(1, n - t + 2)
        ]
    elif a == HALF:
        faces = [DeltaFace(j, n - t + 1, t) for t in range(2, n + 1) for j in range(1, n - t + 2)]
        faces += [GraftFace(s) for s in compositions(n) if len(s) >= 2]
        preds = [(lambda v, f=f: j_face_membership(v, f)) for f in faces]
    else:
        preds = [(lambda v, nb=nb: dot(nb[0], v) == nb[1]) for nb in h.inequalities]
    out, seen = [], set()
    for pred in preds:
        ids = [i for i, v in enumerate(verts) if pred(v)]
        key = frozenset(ids)
        if len(ids) < 3 or key in seen:
            continue
        pl = [P[i] for i in ids]
        if rank([sub(p, pl[0]) for p in pl[1:]]) == 2:
            seen.add(key)
            out.append(ids)
    return [ids for ids in out if not any(frozenset(ids) < other for other in seen)]


def polytope_off(family: str, n: int, a: Fraction | None, h: HRep, verts) -> str:
    pts = [_chart(family, a, v) for v in verts]
    dim = len(pts[0]) if pts else 0
    if dim > MAX_OFF_DIM:
        raise CliError(EXIT_SIZE, f"OFF output needs a polytope of dimension <= {MAX_OFF_DIM}, got {dim}")
    pad = lambda p: tuple(p) + (Fraction(0),) * (3 - len(p))
    P = [pad(p) for p in pts]
    faces: list[list[int]] = []
    real_dim = rank([sub(p, P[0]) for p in P[1:]]) if len(P) > 1 else 0
    if real_dim == 2:
        faces.append(_cyclic([(p[0], p[1]) for p in P]) if dim >= 2 else list(range(len(P))))
    elif real_dim == 3:
        center = tuple(sum(p[i] for p in P) / len(P) for i in range(3))
        for ids in _facet_sets(family, n, a, h, verts, P):
            pl = [P[i] for i in ids]
            c = tuple(sum(p[i] for p in pl) / len(pl) for i in range(3))
            e1 = next(sub(p, c) for p in pl if any(sub(p, c)))
            nv = next(x for x in (_cross(e1, sub(p, c)) for p in pl) if any(x))
            if dot(nv, sub(c, center)) < 0:
                nv = tuple(-x for x in nv)
            e2 = _cross(nv, e1)
            order = _cyclic([(dot(sub(p, c), e1), dot(sub(p, c), e2)) for p in pl])
            faces.append([ids[k] for k in order])
    edges = set()
    for f in faces:
        for i in range(len(f)):
            edges.add(frozenset((f[i], f[(i + 1) % len(f)])))
    if real_dim == 1:
        edges.add(frozenset((0, len(P) - 1)))
    lines = ["OFF", f"{len(P)} {len(faces)} {len(edges)}"]
    lines += [" ".join(str(c) for c in p) for p in P]
    lines += [" ".join(str(x) for x in [len(f)] + f) for f in faces]
    return "\n".join(lines)


def _hrep_lines(h: HRep) -> list[str]:
    out = []
    for nrm, b in h.inequalities:
        out.append(" ".join(str(c) for c in nrm) + f" <= {b}")
    for nrm, b in h.equalities:
        out.append(" ".join(str(c) for c in nrm) + f" = {b}")
    return out


def cmd_polytope(args) -> int:
    family = args.family
    if family == "k" and args.a is not None:
        raise CliError(EXIT_FLAGS, "--a applies to the j family only")
    a = None if family == "k" else (HALF if args.a is None else _parse_level(args.a))
    h, verts = polytope_data(family, args.n, a)
    if args.format == "json":
        print(polytope_json(family, args.n, a, h, verts))
    elif args.format == "off":
        print(polytope_off(family, args.n, a, h, verts))
    else:
        both = not (args.vertices or args.hrep)
        if args.vertices or both:
            for v in verts:
                print(fmt(v))
        if args.hrep or both:
            for line in _hrep_lines(h):
                print(line)
    return 0


# --- trees ----------------------------------------------------------------

def render_tree(t: tr.Tree) -> str:
    counter = iter(range(1, tr.leaves(t) + 1))

    def go(s) -> str:
        beard = "n" if s.beard else ""
        if isinstance(s, tr.Leaf):
            return f"x{next(counter)}{beard}"
        return f"({go(s.left)} {go(s.right)}){beard}"

    return go(t)


def _tree_n(args, bearded: bool) -> int:
    if args.n is None:
        raise CliError(EXIT_FLAGS, f"trees {args.action} needs --n")
    if args.n < 1:
        raise CliError(EXIT_FLAGS, "--n must be at least 1")
    limit = tr.MAX_BEARDED_N if bearded else tr.MAX_TRIVALENT_N
    if args.n > limit:
        raise CliError(EXIT_SIZE, f"tree enumeration is limited to n <= {limit}")
    return args.n


def cmd_trees(args) -> int:
    b = args.bearded
    if args.action == "parse":
        if args.word is None:
            raise CliError(EXIT_FLAGS, "trees parse needs --word")
        try:
            if b:
                t = tr.parse_bearded(args.word)
                print(f"tree: {render_tree(t)}")
                print(f"v-coords: {fmt(tr.v_coords(t))}")
                print(f"u-coords: {fmt(tr.u_coords(t))}")
            else:
                t = tr.parse_word(args.word)
                print(f"tree: {render_tree(t)}")
                print(f"a-coords: {fmt(tr.shadow_a(t))}")
                print(f"b-coords: {fmt(tr.shadow_b(t))}")
        except tr.WordParseError as e:
            raise CliError(EXIT_PARSE, f"parse error: {e}") from None
        return 0
    n = _tree_n(args, b)
    ts = tr.enum_bearded(n) if b else tr.enum_trivalent(n)
    for t in ts:
        w = tr.bearded_word(t) if b else tr.word(t)
        if args.action == "enum":
            print(w)
        elif args.action == "word":
            print(w, tr.bearded_word_prime(t) if b else tr.word_prime(t))
        else:
            print(w, fmt(tr.v_coords(t) if b else tr.shadow_a(t)))
    return 0


# --- verify ---------------------------------------------------------------

def euler_table(n_max: int) -> list[str]:
    c2 = bx.builtin("c2")
    top = min(n_max, bx.MAX_BAR_RANK)
    chis = [bx.euler(bx.build_bar(c2, n)) for n in range(top + 1)]
    return ["C2 strict bar euler characteristic, n = 0.." + str(top) + ": " + " ".join(map(str, chis))]


def cmd_verify(args) -> int:
    if args.n_max < 1 or args.cases < 1:
        raise CliError(EXIT_FLAGS, "--n-max and --cases must be positive")
    if args.n_max > MAX_VERIFY_N:
        raise CliError(EXIT_SIZE, f"--n-max is limited to {MAX_VERIFY_N}")
    print(f"verify suite={args.suite} n_max={args.n_max} cases={args.cases} seed={args.seed}")
    results = run_suite(args.suite, args.n_max, args.cases, args.seed)
    for r in results:
        print(r.line())
    if args.suite in ("bar", "all"):
        for line in euler_table(args.n_max):
            print(line)
    bad = sum(not r.ok for r in results)
    print(f"{len(results) - bad}/{len(results)} checks passed")
    return EXIT_VERIFY if bad else 0


# --- bar ------------------------------------------------------------------

ENDS = {"yxz": (True, True), "*x*": (False, False), "xx*": (True, False)}


def load_monoid(spec: str) -> bx.FiniteMonoid:
    if spec.startswith("builtin:"):
        return bx.builtin(spec.split(":", 1)[1])
    try:
        text = Path(spec).read_text()
    except OSError as e:
        raise CliError(EXIT_FLAGS, f"cannot read monoid file {spec!r}: {e.strerror}") from None
    return bx.FiniteMonoid.parse(text)


def cmd_bar(args) -> int:
    if args.n < 0:
        raise CliError(EXIT_FLAGS, "--n must be nonnegative")
    if args.n > bx.MAX_BAR_RANK:
        raise CliError(EXIT_SIZE, f"bar complexes are limited to n <= {bx.MAX_BAR_RANK}")
    try:
        m = load_monoid(args.monoid)
    except bx.MonoidError as e:
        inst = f" (instance: {' '.join(e.instance)})" if e.instance else ""
        raise CliError(EXIT_MONOID, f"invalid monoid: {e}{inst}") from None
    y, z = ENDS[args.ends]
    b = bx.build_bar(m, args.n, args.model, y_is_x=y, z_is_x=z)
    if args.format == "json":
        print(b.to_json())
    else:
        print(f"monoid: {' '.join(m.elements)} (unit {m.unit})  model: {args.model}  ends: {args.ends}")
        print("counts: " + " ".join(map(str, b.counts())))
        print(f"euler: {bx.euler(b)}")
    return 0


# --- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assocpoly", description="Exact associahedra, multiplihedra and bar complexes.")
    sub_ = p.add_subparsers(dest="command", required=True)

    q = sub_.add_parser("polytope", help="vertices and inequalities of K(n) or J^a(n)")
    q.add_argument("family", choices=["k", "j"])
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--a", help="level p/q for the j family (default 1/2)")
    q.add_argument("--format", choices=["text", "json", "off"], default="text")
    q.add_argument("--vertices", action="store_true")
    q.add_argument("--hrep", action="store_true")
    q.set_defaults(func=cmd_polytope)

    t = sub_.add_parser("trees", help="tree enumeration, words and coordinates")
    t.add_argument("action", choices=["enum", "word", "parse", "coords"])
    t.add_argument("--n", type=int)
    t.add_argument("--bearded", action="store_true")
    t.add_argument("--word")
    t.set_defaults(func=cmd_trees)

    v = sub_.add_parser("verify", help="run the seeded property suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--cases", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    b = sub_.add_parser("bar", help="bar construction cell complexes")
    b.add_argument("--monoid", required=True, help="a table file or builtin:c2|c3|triv")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--model", choices=[bx.STRICT, bx.HOPF], default=bx.STRICT)
    b.add_argument("--ends", choices=list(ENDS), default="*x*")
    b.add_argument("--format", choices=["text", "json"], default="text")
    b.set_defaults(func=cmd_bar)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


if __name__ == "__main__":
    sys.exit(main())
