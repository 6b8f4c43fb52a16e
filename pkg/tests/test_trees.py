from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from assocpoly.associahedron import is_k_point, pl_vertices
from assocpoly.multiplihedron import HALF, is_j_point
from assocpoly.trees import (
    WordParseError,
    at_counts,
    bearded_word,
    bearded_word_prime,
    catalan,
    count_bearded,
    enum_bearded,
    enum_trivalent,
    is_bearded,
    j_lattice,
    j_lattice_dual,
    k_lattice,
    k_lattice_dual,
    leaves,
    mirror,
    parse_bearded,
    parse_bearded_prime,
    parse_word,
    parse_word_prime,
    shadow_a,
    shadow_b,
    strip_beards,
    v_coords,
    word,
    word_prime,
)

from conftest import F


def test_word_example():
    t = parse_word("x1x2@x3@")
    assert word(t) == "x1x2@x3@"
    assert word_prime(t) == "@@x1x2x3"
    assert shadow_a(t) == F(0, 1, 1)
    assert shadow_b(t) == F(2, 0, 0)
    assert at_counts("x1x2@x3@") == F(0, 1, 1)


def test_bearded_small():
    words = sorted(bearded_word(t) for t in enum_bearded(2))
    assert words == ["x1nx2nb", "x1x2#n"]
    assert sorted(bearded_word(t, unicode=True) for t in enum_bearded(2)) == ["x1x2♯♮", "x1♮x2♮♭"]
    assert parse_bearded("x1x2♯♮") == parse_bearded("x1x2#n")


@pytest.mark.parametrize("n", range(1, 8))
def test_trivalent_counts(n):
    assert len(enum_trivalent(n)) == catalan(n - 1)


def test_bearded_counts():
    assert [count_bearded(n) for n in range(1, 6)] == [1, 2, 6, 21, 80]
    assert all(len(enum_bearded(n)) == count_bearded(n) for n in range(1, 6))


@pytest.mark.parametrize("n", range(2, 8))
def test_k_lattice_is_pl(n):
    assert k_lattice(n) == pl_vertices(n)
    assert k_lattice_dual(n) == {tuple(reversed(u)) for u in k_lattice(n)}


def test_j3_lattice():
    got = j_lattice(3)
    assert len(got) == 6 and all(is_j_point(v, HALF) for v in got)
    assert F(0, 0, "5/2") in got and F(HALF, 1, 1) in got
    assert j_lattice_dual(3) == {tuple(reversed(v)) for v in got}


@pytest.mark.parametrize("n", range(2, 6))
def test_bearded_codecs_round_trip(n):
    for t in enum_bearded(n):
        assert is_bearded(t)
        assert parse_bearded(bearded_word(t)) == t
        assert parse_bearded_prime(bearded_word_prime(t)) == t
        assert sum(v_coords(t)) == n - 1 + HALF
        assert leaves(strip_beards(t)) == n


@given(st.integers(1, 8), st.data())
def test_trivalent_codecs_round_trip(n, data):
    t = data.draw(st.sampled_from(enum_trivalent(n)))
    assert parse_word(word(t)) == t
    assert parse_word_prime(word_prime(t)) == t
    assert mirror(mirror(t)) == t
    assert sum(shadow_a(t)) == sum(shadow_b(t)) == n - 1
    assert shadow_b(mirror(t)) == tuple(reversed(shadow_a(t)))


@pytest.mark.parametrize(
    "w, pos",
    [("x1x2", 4), ("x2x1@", 0), ("@x1", 0), ("", 0)],
)
def test_malformed_words(w, pos):
    with pytest.raises(WordParseError) as e:
        parse_word(w)
    assert e.value.position == pos


def test_malformed_bearded():
    for w in ["x1x2#", "x1nx2#n", "x1x2bn"]:
        with pytest.raises(WordParseError):
            parse_bearded(w)
