from __future__ import annotations

import math
from collections import Counter

import pytest

from coxcat.flats import exponent_levels, laplacian_sides, product_combine, regions_sides
from coxcat.scalars import UniPoly
from coxcat.workspace import load

DESK = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "H3"] + [f"I2({m})" for m in range(3, 13)]
t = UniPoly.variable("t")


def by_type(lat, name):
    return [o for o in lat.orbits if str(o.parabolic_type) == name]


@pytest.mark.parametrize("text, flats, dims", [
    ("A1", 2, [1, 0]), ("A2", 5, [2, 1, 0]), ("B2", 6, [2, 1, 1, 0]),
])
def test_small_lattices(text, flats, dims):
    lat = load(text).lattice
    assert len(lat.flats) == flats
    assert sorted((o.dim for o in lat.orbits), reverse=True) == dims


def test_h3_orbit_types():
    lat = load("H3").lattice
    assert sorted(str(o.parabolic_type) for o in lat.orbits) == sorted(["1", "A1", "A1xA1", "A2", "I2(5)", "H3"])


def test_a2_mobius_and_char_poly():
    lat = load("A2").lattice
    V, O = lat.bottom, lat.top
    line = next(x for x, f in enumerate(lat.flats) if f.dim == 1)
    assert lat.mobius(V, V) == 1
    assert lat.mobius(V, line) == -1
    assert lat.mobius(V, O) == 2
    assert lat.char_poly(O) == 1
    assert lat.char_poly(V) == (t - 1) * (t - 2)
    a1 = by_type(lat, "A1")[0]
    assert lat.os_exponents(a1.index) == [1]
    assert lat.coxeter_numbers_multiset(O, V) == [3, 3]
    assert lat.coxeter_numbers_multiset(line, V) == [2]
    assert lat.coxeter_numbers_multiset(V, V) == []
    assert lat.normalizer_index(a1.index) == 1 and lat.nu(a1.index) == 2


def test_b2_short_line():
    lat = load("B2").lattice
    idx = sorted((lat.normalizer_index(o.index), lat.nu(o.index)) for o in by_type(lat, "A1"))
    assert idx == [(2, 1), (2, 1)]


def test_f4_data():
    lat = load("F4").lattice
    assert lat.exponents() == [1, 5, 7, 11]
    (b2,) = by_type(lat, "B2")
    assert lat.orbit_char_poly(b2.index) == (t - 1) * (t - 3)
    assert exponent_levels(lat) == [1, 3, 3, 4]


@pytest.mark.parametrize("text", DESK)
def test_orbit_data_against_brute_force(text):
    ws = load(text)
    W, lat = ws.system, ws.lattice
    # every w lies in exactly one orbit, and conjugation preserves orbits
    assert sorted(f for o in lat.orbits for f in o.members) == list(range(len(lat.flats)))
    for o in lat.orbits:
        x = o.representative
        stab = sum(1 for w in W.elements if lat.act(w, x) == x)
        assert stab == W.order // len(o.members)
        wx = sum(1 for w in W.elements if W.fix_reflections(w) <= lat.flats[x].reflections)
        assert lat.parabolic_order(x) == wx
        assert lat.normalizer_index(o.index) == stab // wx
        assert lat.parabolic_type(x).order == wx
        # p_X has the orbit dimension and splits over the positive integers
        p = lat.orbit_char_poly(o.index)
        assert p.degree == o.dim
        assert all(b > 0 for b in lat.os_exponents(o.index))
    assert lat.char_poly(lat.bottom) == UniPoly.from_roots(W.ctype.exponents)
    census = Counter(W.fix_dim(w) for w in W.elements)
    rhs = UniPoly.from_roots([-e for e in W.ctype.exponents])
    assert [census[k] for k in range(W.rank + 1)] == [int(c) for c in rhs.coeffs]


@pytest.mark.parametrize("text", DESK)
def test_nu_and_factorisation(text):
    lat = load(text).lattice
    assert sum(lat.nu(o.index) for o in lat.orbits) == 2 ** lat.system.rank
    for o in lat.orbits:
        ex = lat.os_exponents(o.index)
        assert lat.nu(o.index) * lat.normalizer_index(o.index) == math.prod(b + 1 for b in ex)


@pytest.mark.parametrize("text", ["A2", "A3", "B3", "H3", "I2(5)"])
def test_laplacian_identity(text):
    lat = load(text).lattice
    for x in range(len(lat.flats)):
        for z in range(len(lat.flats)):
            if lat.leq(z, x):
                lhs, rhs = laplacian_sides(lat, x, z)
                assert lhs == rhs
    for z in range(len(lat.flats)):
        lhs, rhs = regions_sides(lat, z)
        assert lhs == rhs


def test_regions_of_a2():
    lat = load("A2").lattice
    assert [lat.regions(o.index) for o in lat.orbits] == [1, 2, 6]


def test_product_tables():
    a1 = load("A1").lattice.orbit_table()
    combined = product_combine(a1, a1)
    assert len(combined) == 4
    direct = load("A1xA1").lattice.orbit_table()
    key = lambda r: (r["dim"], r["normalizer_index"] * r["size"], tuple(r["os_exponents"]))
    assert sorted(map(key, combined)) == sorted(map(key, direct))
    a2 = load("A2").lattice.orbit_table()
    combined = product_combine(a2, a1)
    direct = load("A2xA1").lattice.orbit_table()
    assert sorted(map(key, combined)) == sorted(map(key, direct))
