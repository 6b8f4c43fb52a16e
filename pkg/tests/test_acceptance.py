"""Acceptance criteria, one test and one summary line per criterion.

Each test runs the relevant verification suite at the acceptance sizes and
checks the named results, their case counts and a few direct oracles.  A
line ``criterion N: PASS|FAIL ...`` is collected for the terminal summary.
"""

from __future__ import annotations

import pytest

from assocpoly.barcx import build_bar, cyclic, euler
from assocpoly.suites import HOLDS, run_suite
from assocpoly.trees import catalan, count_bearded, enum_bearded, enum_trivalent, k_lattice

from conftest import ACCEPTANCE_LINES, F

SEED = 20240601


def _suite(name, n_max, cases):
    return {r.name: r for r in run_suite(name, n_max, cases, SEED)}


@pytest.fixture(scope="module")
def degeneracy():
    return _suite("degeneracy", 7, 10_000)


@pytest.fixture(scope="module")
def boundary():
    return _suite("boundary", 7, 1000)


@pytest.fixture(scope="module")
def delta():
    return _suite("delta", 7, 1000)


@pytest.fixture(scope="module")
def omega():
    return _suite("omega", 5, 1000)


@pytest.fixture(scope="module")
def operad():
    return _suite("operad", 6, 1000)


@pytest.fixture(scope="module")
def bar():
    return _suite("bar", 8, 100)


@pytest.fixture(scope="module")
def trees():
    return _suite("trees", 8, 100)


class Criterion:
    """Collects problems for one criterion and reports a single line."""

    def __init__(self, number: int, title: str):
        self.number, self.title = number, title
        self.problems: list[str] = []
        self.checked = 0

    def claim(self, results: dict, names, min_cases: int = 1) -> None:
        """Each named claim must hold with no failures on enough cases."""
        for name in [names] if isinstance(names, str) else names:
            r = results.get(name)
            if r is None:
                self.problems.append(f"{name} did not run")
                continue
            self.checked += 1
            if r.failures:
                self.problems.append(f"{name}: {r.failures}/{r.cases} fail, e.g. {r.counterexample}")
            elif r.cases < min_cases:
                self.problems.append(f"{name}: only {r.cases} cases (< {min_cases})")

    def branches(self, results: dict, prefix: str, min_cases: int) -> None:
        names = [n for n, r in results.items() if n.startswith(prefix) and r.expect == HOLDS]
        if not names:
            self.problems.append(f"no checks named {prefix}*")
        self.claim(results, names, min_cases)

    def direct(self, ok: bool, what: str) -> None:
        self.checked += 1
        if not ok:
            self.problems.append(what)

    def finish(self) -> None:
        ok = not self.problems
        detail = f"{self.checked} checks" if ok else "; ".join(self.problems)
        line = f"criterion {self.number}: {'PASS' if ok else 'FAIL'} {self.title}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line


def test_criterion_01_vertex_counts(trees):
    c = Criterion(1, "vertex counts and H-rep vertex enumeration")
    c.claim(trees, "trivalent-count-catalan", 8)
    c.direct(
        [len(enum_trivalent(n)) for n in range(1, 9)] == [1, 1, 2, 5, 14, 42, 132, 429],
        "tree counts differ from 1,1,2,5,14,42,132,429",
    )
    c.claim(trees, ["lattice-points-distinct", "lattice-equals-insertion-vertices"])
    c.claim(trees, "hrep-vertices-equal-lattice", 6)
    c.finish()


def test_criterion_02_k4_figures(trees):
    c = Criterion(2, "K(4) and K'(4) vertex sets")
    expected = {F(0, 0, 2, 1), F(0, 0, 1, 2), F(0, 0, 0, 3), F(0, 1, 0, 2), F(0, 1, 1, 1)}
    c.direct(k_lattice(4) == expected, f"K(4) lattice is {sorted(k_lattice(4))}")
    c.claim(trees, ["K4-figure", "K4-dual-figure"])
    c.finish()


def test_criterion_03_j3_and_bearded_counts(trees):
    c = Criterion(3, "J_L(3) figure, hull, bearded counts")
    c.claim(trees, ["J3-figure", "J3-hull-double-inclusion", "bearded-counts"])
    c.direct([count_bearded(n) for n in range(1, 5)] == [1, 2, 6, 21], "bearded counts for n <= 4")
    c.direct(len(enum_bearded(5)) == count_bearded(5), "enumeration and recursion disagree at n = 5")
    c.finish()


def test_criterion_04_bearded_coordinates(trees):
    c = Criterion(4, "bearded coordinate sums and prefix bounds, n <= 8")
    c.claim(trees, "bearded-coordinate-sums", sum(count_bearded(n) for n in range(1, 9)))
    c.finish()


def test_criterion_05_xi_properties(degeneracy):
    c = Criterion(5, "shift map properties")
    c.claim(
        degeneracy,
        [
            "xi-componentwise-bounds",
            "xi-deficit-at-most-one",
            "xi-tail-fixed-after-full-deficit",
            "xi-first-coordinate-drop",
            "xi-prefix-bound-transfer",
            "xi-split-at-threshold",
            "xi-split-inner-block",
        ],
        10_000,
    )
    c.finish()


def test_criterion_06_xi_closure(degeneracy):
    c = Criterion(6, "shift map closure on K(n) and J(n)")
    c.claim(degeneracy, ["xi-closure-K", "xi-closure-J"], 1000)
    c.finish()


def test_criterion_07_case_tables(degeneracy):
    c = Criterion(7, "degeneracy case tables")
    for prefix in ("xi-of-K-face[", "xi-of-J-face[", "dK-of-K-face[", "dJ-of-J-face[", "dJ-of-graft["):
        c.branches(degeneracy, prefix, 100)
    c.finish()


def test_criterion_08_boundary_coherence(boundary, delta):
    c = Criterion(8, "boundary insertion and delta relations")
    c.branches(boundary, "face-relation[", 1000)
    c.branches(boundary, "dual-face-relation[", 1000)
    c.branches(delta, "delta-relation[", 1000)
    c.claim(boundary, ["boundary-points-recompose", "insertion-decomposes"])
    c.claim(delta, ["J-boundary-covered", "delta-images-on-boundary", "sweep-recompose"])
    c.finish()


def test_criterion_09_omega(omega):
    c = Criterion(9, "omega on faces, degeneracies, well-definedness")
    c.branches(omega, "omega-on-faces[", 1)
    c.claim(omega, ["omega-intertwines-dJ-dS", "omega1-intertwines-dK-dS"], 1)
    c.claim(omega, ["omega-decomposition-independent", "dS-decomposition-independent"])
    c.claim(omega, ["omega-zero-is-identity", "omega-lands-in-J0"])
    c.finish()


def test_criterion_10_monoid(boundary):
    c = Criterion(10, "monoid product on K points")
    c.claim(boundary, ["monoid-associative", "monoid-compatible-left", "monoid-compatible-right"], 1000)
    c.finish()


def test_criterion_11_operadic_categories(operad):
    c = Criterion(11, "operadic categories and representations")
    c.claim(operad, ["tuple-composition-associative", "unital-composition-associative"], 1000)
    c.branches(operad, "functorial[", 1000)
    if len([n for n in operad if n.startswith("functorial[")]) != 6:
        c.direct(False, "expected six representations")
    c.claim(operad, "index-merge-matches-deletion", 1000)
    c.finish()


def test_criterion_12_bar_construction(bar):
    c = Criterion(12, "bar construction counts, confluence, primed model")
    c.claim(bar, ["strict-C2-one-cell-per-rank", "strict-C2-euler"], 9)
    c.claim(bar, ["strict-counts-power-law", "normal-form-confluent[rank<=3]", "primed-model-matches-omega"])
    for n in range(9):
        bc = build_bar(cyclic(2), n)
        c.direct(bc.counts() == [1] * (n + 1), f"C2 counts at n = {n}")
        c.direct(euler(bc) == (1 + (-1) ** n) // 2, f"C2 euler at n = {n}")
    c.direct(build_bar(cyclic(3), 6).counts() == [2**r for r in range(7)], "C3 counts")
    c.finish()


def test_criterion_13_projection(omega):
    c = Criterion(13, "projection and rescaling maps")
    for prefix in ("pi-on-delta-faces[", "pi-of-base-graft[", "pi-commutes-with-degeneracies["):
        c.branches(omega, prefix, 1)
    c.finish()


def test_criterion_14_word_codecs(trees):
    c = Criterion(14, "word codecs")
    c.claim(trees, ["word-round-trip", "polish-word-round-trip"], sum(catalan(n - 1) for n in range(1, 8)))
    c.claim(
        trees, ["bearded-word-round-trip", "bearded-polish-round-trip"], sum(count_bearded(n) for n in range(1, 7))
    )
    c.claim(trees, "malformed-words-rejected", 10)
    c.finish()
