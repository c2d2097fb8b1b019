from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcat.coxeter import TypeParseError, build_system, classify, is_heavy, parse_type
from coxcat.workspace import load

DESK = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3"] + [f"I2({m})" for m in range(3, 13)]


@pytest.mark.parametrize("text, expected", [
    ("A2", "A2"), ("B2xA1", "B2xA1"), ("B2 × A1", "B2xA1"), ("I2(7)", "I2(7)"), ("H3*A1", "H3xA1"),
])
def test_parse(text, expected):
    assert str(parse_type(text)) == expected


@pytest.mark.parametrize("text", ["A0", "Z9", "D3", "I2(2)", "E9", "H5", "", "A2x"])
def test_parse_errors(text):
    with pytest.raises(TypeParseError):
        parse_type(text)


@pytest.mark.parametrize("text, roots, h, refl", [
    ("A2", 6, 3, 3), ("H3", 30, 10, 15), ("I2(7)", 14, 7, 7), ("B3", 18, 6, 9), ("F4", 48, 12, 24),
])
def test_root_systems(text, roots, h, refl):
    W = build_system(text)
    assert len(W.roots) == roots
    assert W.coxeter_number() == h
    assert len(W.reflections) == refl
    assert 2 * refl == W.rank * h


@pytest.mark.parametrize("text, order", [("A2", 6), ("B2", 8), ("F4", 1152), ("H3", 120), ("D4", 192),
                                         ("A1xA1", 4), ("B2xA1", 16)])
def test_group_orders(text, order):
    W = load(text).system
    assert W.order == order == len(W.elements) == parse_type(text).order


@pytest.mark.parametrize("text", DESK)
def test_coxeter_matrix_recovered_from_element_orders(text):
    W = load(text).system
    cm = parse_type(text).coxeter_matrix()
    s = W.simple_reflections
    for i in range(W.rank):
        for j in range(W.rank):
            assert W.element_order(s[i] * s[j]) == cm[i][j]
    assert classify(cm).coxeter_matrix() == cm and classify(cm).order == W.order


@pytest.mark.parametrize("text", DESK)
def test_length_and_reflection_length(text):
    W = load(text).system
    c = W.coxeter_element
    assert W.length(W.identity) == 0 and W.fix_dim(W.identity) == W.rank
    assert W.reflection_length(c) == W.rank
    assert W.element_order(c) == W.coxeter_number()
    w0 = W.longest_element
    assert W.length(w0) == W.num_positive
    for t in W.reflections:
        assert W.reflection_length(t) == 1 and W.fix_dim(t) == W.rank - 1
    # generating function of length over W is prod [e_i + 1]_q
    counts = {}
    for w in W.elements:
        counts[W.length(w)] = counts.get(W.length(w), 0) + 1
    poly = [1]
    for e in parse_type(text).exponents:
        poly = [sum(poly[k - i] for i in range(e + 1) if 0 <= k - i < len(poly)) for k in range(len(poly) + e)]
    assert [counts[k] for k in range(len(poly))] == poly


def test_small_examples():
    W = build_system("A2")
    s1, s2 = W.simple_reflections
    assert (s1 * s1).is_identity()
    c = W.coxeter_element
    assert (~c * c).is_identity()
    assert s1(0) == W.neg(0)
    assert W.length(c) == 2 and W.length(W.longest_element) == 3
    assert repr(W.identity) == "e"


def test_product_components():
    W = load("B2xA1").system
    assert len(W.components) == 2
    assert sorted(W.component_coxeter_numbers()) == [2, 4]
    with pytest.raises(Exception):
        W.coxeter_number()


def test_heavy_tier():
    assert is_heavy(parse_type("E8")) and is_heavy(parse_type("H4")) and is_heavy(parse_type("A6"))
    assert not is_heavy(parse_type("F4")) and not is_heavy(parse_type("A5"))


def test_parabolic_embedding():
    W = load("B3").system
    par = W.parabolic((1, 2))
    assert par.system.order == 8
    for w in par.system.elements:
        v = par.embed(w)
        assert par.contains(v)
        assert par.restrict(v) == w
        assert W.length(v) == par.system.length(w)


words = st.lists(st.integers(0, 2), max_size=12)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["A3", "B3", "H3"]), words, words)
def test_length_properties(text, a, b):
    W = load(text).system
    u, v = W.element(a), W.element(b)
    assert W.length(u * v) <= W.length(u) + W.length(v)
    assert (W.length(u * v) - W.length(u) - W.length(v)) % 2 == 0
    assert W.length(~u) == W.length(u)
    assert W.reflection_length(u) == W.rank - W.fix_dim(u)
    assert W.element(W.reduced_word(u)) == u
    assert len(W.reduced_word(u)) == W.length(u)
