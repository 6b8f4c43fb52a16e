import json

import pytest
from hypothesis import given, strategies as st

from assocpoly.barcx import (
    HOPF,
    STRICT,
    BarCell,
    FiniteMonoid,
    MonoidError,
    build_bar,
    builtin,
    cyclic,
    euler,
    is_homomorphism,
    map_cell,
    normal_form,
    all_normal_forms,
)


def test_builtin_text_round_trip():
    m = builtin("c2")
    assert m.to_text() == "elements: e g\ntable: e g / g e"
    assert FiniteMonoid.parse(m.to_text()) == m
    with pytest.raises(MonoidError):
        builtin("nope")


def test_monoid_axioms_rejected():
    with pytest.raises(MonoidError):
        FiniteMonoid.parse("elements: a b\ntable: a a / b a")
    with pytest.raises(MonoidError):
        FiniteMonoid.parse("elements: a b\ntable: a b")
    with pytest.raises(MonoidError):
        FiniteMonoid.parse("elements: a b")


def test_non_associative_instance():
    # unit e; x*y = y*x = x, x*x = y, y*y = x; (xx)y = x*... is checked exhaustively
    rows = [["e", "x", "y"], ["x", "y", "x"], ["y", "x", "x"]]
    with pytest.raises(MonoidError) as err:
        FiniteMonoid.from_table(["e", "x", "y"], rows)
    assert len(err.value.instance) == 3


def test_c2_strict_counts():
    bc = build_bar(cyclic(2), 4)
    assert bc.counts() == [1, 1, 1, 1, 1]
    assert euler(bc) == 1


def test_hopf_counts_and_euler():
    bc = build_bar(cyclic(2), 3, HOPF)
    assert bc.counts() == [1, 2, 4, 8]
    assert euler(bc) == -5


def test_two_sided_counts():
    bc = build_bar(cyclic(3), 3, STRICT, True, True)
    assert bc.counts() == [9, 18, 36, 72]


def test_json_is_consistent():
    bc = build_bar(cyclic(2), 2)
    data = json.loads(bc.to_json())
    assert data["counts"] == bc.counts()
    assert len(data["cells"]) == sum(bc.counts())
    top = [c for c in data["cells"] if c["rank"] == 2][0]
    assert len(top["attachments"]) == 5


def test_build_bar_limits():
    with pytest.raises(ValueError):
        build_bar(cyclic(2), 9)
    with pytest.raises(ValueError):
        build_bar(cyclic(2), 1, "lax")


def test_homomorphism_to_trivial():
    f = {"e": "e", "g": "e"}
    assert is_homomorphism(f, cyclic(2), cyclic(1))
    assert not is_homomorphism({"e": "g", "g": "g"}, cyclic(2), cyclic(2))
    assert map_cell(BarCell(None, ("g", "g"), None), f) == BarCell(None, ("e", "e"), None)
