from __future__ import annotations

import itertools

import pytest

from coxcat.cluster import ColoredRoot, gamma_closed_form, h_from_f
from coxcat.linalg import matvec
from coxcat.noncross import fuss_catalan
from coxcat.workspace import load

SMALL = ["A1", "A2", "A3", "B2", "B3", "H3", "I2(5)", "A1xA1", "A2xA1"]


def brute_faces(cx):
    """All pairwise compatible vertex sets, by plain subset enumeration."""
    nv = len(cx.vertices)
    out = set()
    for k in range(cx.system.rank + 1):
        for sub in itertools.combinations(range(nv), k):
            if all(cx.compatible(a, b) for a, b in itertools.combinations(sub, 2)):
                out.add(sub)
    return out


def test_a2_pentagon():
    cx = load("A2").complex(1)
    W = cx.system
    assert cx.f_vector() == [1, 5, 5]
    assert cx.f_vector(plus=True) == [1, 3, 2]
    assert cx.h_vector() == [1, 3, 1]
    assert cx.gamma() == [1, 5, 5]
    assert cx.gamma(plus=True) == [1, 3, 2]
    lat = cx.lattice
    a1 = lat.orbit_by_label("A1").index
    assert gamma_closed_form(lat, a1, 1) == 5
    neg1 = cx.vertex_id[ColoredRoot(W.neg(0), 1)]
    neg2 = cx.vertex_id[ColoredRoot(W.neg(1), 1)]
    pos = {W.roots[k]: cx.vertex_id[ColoredRoot(k, 1)] for k in range(W.num_positive)}
    assert cx.compatible(neg1, neg2)
    assert cx.compatible(neg1, pos[(0, 1)])
    assert not cx.compatible(neg1, pos[(1, 1)])
    assert not cx.compatible(neg1, pos[(1, 0)])
    assert not cx.compatible(neg1, neg1)


def test_b2_m2_facets():
    assert load("B2").complex(2).facets() == 15


def test_h_from_f():
    assert h_from_f([1, 5, 5]) == [1, 3, 1]
    assert h_from_f([1, 3, 2]) == [1, 1, 0]
    assert h_from_f([1]) == [1]


@pytest.mark.parametrize("text", SMALL)
def test_negative_simple_compatibility_at_m1(text):
    cx = load(text).complex(1)
    W = cx.system
    for i in range(W.rank):
        u = cx.vertex_id[ColoredRoot(W.neg(i), 1)]
        for k in range(W.num_positive):
            v = cx.vertex_id[ColoredRoot(k, 1)]
            assert cx.compatible(u, v) == (W.roots[k][i] == 0)


@pytest.mark.parametrize("text", SMALL)
@pytest.mark.parametrize("m", [1, 2])
def test_faces_are_the_cliques(text, m):
    cx = load(text).complex(m)
    faces = {f for f, _ in cx.faces}
    assert faces == brute_faces(cx)
    n = cx.system.rank
    nv = len(cx.vertices)
    for u in range(nv):
        assert not cx.compatible(u, u)
        for v in range(nv):
            assert cx.compatible(u, v) == cx.compatible(v, u)
            assert cx.compatible(u, v) == cx.compatible(cx.rotate(u), cx.rotate(v))
    # pure of dimension n - 1; products of facets equal c
    maximal = [f for f in faces if not any(set(f) < set(g) for g in faces if len(g) == len(f) + 1)]
    assert all(len(f) == n for f in maximal)
    for f, idx in cx.faces:
        if len(f) == n:
            assert cx.nc.items[idx].element == cx.nc.c


@pytest.mark.parametrize("text", ["A3", "B3", "H3", "D4", "I2(8)"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_counts(text, m):
    ws = load(text)
    cx, nc, lat = ws.complex(m), ws.nc, ws.lattice
    ct = ws.system.ctype
    assert cx.facets() == fuss_catalan(ct)(m)
    assert cx.facets(plus=True) == fuss_catalan(ct, plus=True)(m)
    assert cx.h_vector() == nc.narayana(m)[::-1]
    assert cx.h_vector(plus=True) == nc.narayana(m, plus=True)[::-1]
    assert cx.gamma() == matvec(nc.matrices["N"], nc.kappa(m))
    assert cx.gamma(plus=True) == matvec(nc.matrices["N"], nc.kappa(m, plus=True))
    for o in lat.orbits:
        assert cx.gamma()[o.index] == gamma_closed_form(lat, o.index, m)
        assert cx.gamma(plus=True)[o.index] == gamma_closed_form(lat, o.index, m, plus=True)
        if o.dim == 0:
            assert cx.gamma()[o.index] == 1


@pytest.mark.parametrize("text", ["A2", "B2", "A3", "I2(5)", "A2xA1"])
@pytest.mark.parametrize("m", [1, 2])
def test_bijection_round_trip(text, m):
    cx = load(text).complex(m)
    nc = cx.nc
    chains = cx.chains()
    assert len(chains) == len(cx.faces)
    for face, _ in cx.faces:
        chain = cx.face_to_chain(face)
        assert cx.chain_to_face(chain) == face
        assert nc.sqsubset(chain[0], chain[1])
    for chain in chains:
        assert cx.face_to_chain(cx.chain_to_face(chain)) == chain
    W = cx.system
    negatives = tuple(sorted(cx.vertex_id[ColoredRoot(W.neg(i), 1)] for i in range(W.rank)))
    assert cx.face_to_chain(negatives) == (W.identity,) * (m + 1)
    assert cx.face_to_chain(()) == (nc.c,) * (m + 1)


@pytest.mark.parametrize("text", ["A2", "B3", "H3", "I2(7)"])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_rotation_orbits(text, m):
    cx = load(text).complex(m)
    full = m * cx.system.coxeter_number() + 2
    for v in range(len(cx.vertices)):
        assert len(cx.orbit(v)) in (full, full / 2)
    for i, (face, _) in enumerate(cx.faces):
        j = cx.face_index[cx.rotate_face(face)]
        assert cx.face_label(j) == cx.face_label(i)
