from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxcat.coxeter import parse_type
from coxcat.noncross import catalan_number, fuss_catalan
from coxcat.workspace import load

DESK = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3"] + [f"I2({m})" for m in range(3, 13)]


@pytest.mark.parametrize("text, size", [("A1", 2), ("A2", 5), ("B2", 6), ("A3", 14), ("H3", 32), ("F4", 105)])
def test_sizes(text, size):
    assert len(load(text).nc.items) == size == catalan_number(parse_type(text))


def test_catalan_numbers():
    assert catalan_number(parse_type("A2")) == 5 and catalan_number(parse_type("A2"), plus=True) == 2
    assert catalan_number(parse_type("B2")) == 6 and catalan_number(parse_type("B2"), plus=True) == 3
    assert catalan_number(parse_type("B2"), 2) == 15
    assert fuss_catalan(parse_type("A1xA1"))(2) == 9


def test_a2_orders():
    ws = load("A2")
    W, nc = ws.system, ws.nc
    s1, s2 = W.simple_reflections
    c = nc.c
    e = W.identity
    t = s1 * s2 * s1
    assert c == s1 * s2
    assert nc.canonical_factorization(e) == []
    assert nc.canonical_factorization(t) == [t]
    assert nc.canonical_factorization(c) == [s1, s2]
    assert nc.sqsubset(s1, c)
    assert not nc.sqsubset(t, c) and nc.ll(t, c)
    assert not nc.ll(e, c)
    assert nc.unique_middle(e, c) == e
    assert nc.unique_middle(t, c) == c
    assert nc.unique_middle(s1, c) == s1
    assert nc.kreweras(e) == c and nc.kreweras(c) == e
    for r in W.reflections:
        assert W.reflection_length(nc.kreweras(r)) == 1
    assert nc.narayana(1) == [1, 3, 1]


def test_a2_kappa():
    nc = load("A2").nc
    lat = nc.lattice
    a1 = lat.orbit_by_label("A1").index
    triv = lat.orbit_by_label("1").index
    assert nc.kappa(1)[a1] == 3
    assert nc.kappa(1, plus=True)[a1] == 1
    for m in range(1, 6):
        assert nc.kappa(m)[triv] == m * (3 * m - 1) // 2


def test_a2_matrices():
    mats = load("A2").nc.matrices
    assert [row[0] for row in mats["N"]] == [1, 2, 1]
    assert [mats["D"][i][i] for i in range(3)] == [1, -1, 1]
    assert mats["U"] == [1, 0, 0]


def brute_kappa(nc, m, plus=False):
    """Count multichains w_1 <= ... <= w_m directly."""
    out = [0] * len(nc.lattice.orbits)
    for chain in itertools.product(nc.items, repeat=m):
        if all(nc.leq(a.element, b.element) for a, b in zip(chain, chain[1:])):
            if plus and not nc.is_full_support(chain[-1].element):
                continue
            out[chain[0].orbit] += 1
    return out


@pytest.mark.parametrize("text", ["A2", "B2", "A3", "I2(5)", "A1xA1"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_kappa_against_brute_force(text, m):
    nc = load(text).nc
    assert nc.kappa(m) == brute_kappa(nc, m)
    assert nc.kappa(m, plus=True) == brute_kappa(nc, m, plus=True)
    for o in nc.lattice.orbits:
        assert nc.kappa_poly(o.index)(m) == nc.kappa(m)[o.index]
        assert nc.kappa_plus_poly(o.index)(m) == nc.kappa(m, plus=True)[o.index]


@pytest.mark.parametrize("text", DESK)
def test_lattice_structure(text):
    nc = load(text).nc
    W = nc.system
    n = W.rank
    # every element has a factorisation into its simple system and Boolean ⊏-intervals
    for rec in nc.items:
        assert len(rec.canonical) == rec.length
        assert W.product(nc.canonical_factorization(rec.element)) == rec.element
        assert len(nc.subword_elements(rec.element)) == 2 ** rec.length
        assert nc.leq(rec.element, nc.c)
    # Kreweras is a bijection reversing rank
    images = {nc.kreweras(r.element) for r in nc.items}
    assert images == {r.element for r in nc.items}
    for r in nc.items:
        assert W.reflection_length(nc.kreweras(r.element)) == n - r.length
    assert sum(nc.narayana(1)) == len(nc.items)
    assert nc.narayana(1) == nc.narayana(1)[::-1]


@pytest.mark.parametrize("text", DESK + ["A5"])
def test_matrix_identities(text):
    nc = load(text).nc
    assert all(nc.matrix_identities().values())
    for m in (1, 2, 3):
        assert nc.park_vector(m) == nc.kappa(m)
        assert nc.park_plus_vector(m) == nc.kappa(m, plus=True)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A3", "B3", "H3", "D4"]), st.data())
def test_absolute_order_is_a_partial_order(text, data):
    nc = load(text).nc
    u, v, w = (data.draw(st.sampled_from(nc.items)).element for _ in range(3))
    if nc.leq(u, v) and nc.leq(v, u):
        assert u == v
    if nc.leq(u, v) and nc.leq(v, w):
        assert nc.leq(u, w)
    if nc.sqsubset(u, v):
        assert nc.leq(u, v)
    if nc.ll(u, v):
        assert nc.leq(u, v)
    if nc.leq(u, v):
        mid = nc.unique_middle(u, v)
        assert nc.ll(u, mid) and nc.sqsubset(mid, v)
