"""Identity checks grouped into suites, shared by the command line and the tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import factor
from .characters import inclusion_exclusion_sides, solomon_sides, subsets, table_for
from .cluster import gamma_closed_form
from .flats import laplacian_sides, regions_sides
from .linalg import matvec
from .noncross import fuss_catalan
from .scalars import UniPoly
from .workspace import Workspace

SUITES = ("flats", "kreweras", "faces", "matrices", "bijection", "factorizations", "characters", "laplacian")


@dataclass
class CheckResult:
    suite: str
    identity: str
    group: str
    m: int | None
    passed: bool
    skipped: bool = False
    counterexample: dict | None = field(default=None)

    def as_dict(self) -> dict:
        out = {"suite": self.suite, "identity": self.identity, "group": self.group, "m": self.m,
               "status": "skip" if self.skipped else "pass" if self.passed else "fail"}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


def _plain(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, UniPoly):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


class Checker:
    def __init__(self, ws: Workspace, ms=(1, 2, 3), inject_fault: bool = False):
        self.ws = ws
        self.ms = tuple(ms)
        self.group = str(ws.system.ctype)
        self.inject_fault = inject_fault
        self.results: list[CheckResult] = []

    @property
    def irreducible(self) -> bool:
        return len(self.ws.system.components) == 1

    def record(self, suite, identity, m, pairs, skipped=False):
        """``pairs`` yields (context, lhs, rhs); the first mismatch becomes the counterexample."""
        if skipped:
            self.results.append(CheckResult(suite, identity, self.group, m, True, skipped=True))
            return
        bad = None
        for ctx, lhs, rhs in pairs:
            if lhs != rhs:
                bad = {"at": _plain(ctx), "lhs": _plain(lhs), "rhs": _plain(rhs)}
                break
        self.results.append(CheckResult(suite, identity, self.group, m, bad is None, counterexample=bad))

    def orbit_label(self, i):
        return self.ws.lattice.orbits[i].label

    # -- suites -------------------------------------------------------------------------

    def run(self, suites) -> list[CheckResult]:
        for s in suites:
            getattr(self, f"suite_{s}")()
        return self.results

    def suite_flats(self):
        lat = self.ws.lattice
        W = self.ws.system
        orbits = lat.orbits

        def splits():
            for o in orbits:
                yield o.label, lat.orbit_char_poly(o.index), UniPoly.from_roots(lat.os_exponents(o.index), "t")
        self.record("flats", "p_X splits over the integers", None, splits())
        self.record("flats", "1/[N:W_X] = nu/prod(b_i+1)", None, (
            (o.label, Fraction(1, lat.normalizer_index(o.index)),
             Fraction(lat.nu(o.index), math.prod(b + 1 for b in lat.os_exponents(o.index))))
            for o in orbits))
        self.record("flats", "regions = nu [N:W_X]", None, (
            (o.label, lat.regions(o.index), lat.nu(o.index) * lat.normalizer_index(o.index)) for o in orbits))
        t = UniPoly.variable("t")
        census = UniPoly((), "t")
        for w in W.elements:
            census = census + t ** W.fix_dim(w)
        self.record("flats", "sum t^dim Fix(w) = prod(t + e_i)", None,
                    [("W", census, UniPoly.from_roots([-e for e in lat.exponents()], "t"))])
        self.record("flats", "exponents match the type", None,
                    [("W", lat.exponents(), list(W.ctype.exponents))])

    def suite_kreweras(self):
        lat, nc = self.ws.lattice, self.ws.nc
        for m in self.ms:
            kap, kapp = nc.kappa(m), nc.kappa(m, plus=True)
            if self.inject_fault and m == self.ms[0]:
                kap = list(kap)
                kap[0] += 1
            self.record("kreweras", "kappa census = kappa polynomial", m,
                        ((self.orbit_label(i), kap[i], nc.kappa_poly(i)(m)) for i in range(len(kap))))
            self.record("kreweras", "kappa+ census = kappa+ polynomial", m,
                        ((self.orbit_label(i), kapp[i], nc.kappa_plus_poly(i)(m)) for i in range(len(kap))))
            self.record("kreweras", "sum of Narayana numbers = Fuss-Catalan", m, [
                ("Nar", sum(nc.narayana(m)), fuss_catalan(self.ws.system.ctype)(m)),
                ("Nar+", sum(nc.narayana(m, plus=True)), fuss_catalan(self.ws.system.ctype, plus=True)(m))])
            if not self.irreducible:
                self.record("kreweras", "kappa = p_X(mh+1)/[N:W_X]", m, (), skipped=True)
                continue
            h = self.ws.system.coxeter_number()
            self.record("kreweras", "kappa = p_X(mh+1)/[N:W_X]", m, (
                (o.label, kap[o.index], lat.orbit_char_poly(o.index)(m * h + 1) / lat.normalizer_index(o.index))
                for o in lat.orbits))
            self.record("kreweras", "kappa+ = p_X(mh-1)/[N:W_X]", m, (
                (o.label, kapp[o.index], lat.orbit_char_poly(o.index)(m * h - 1) / lat.normalizer_index(o.index))
                for o in lat.orbits))

    def suite_matrices(self):
        nc = self.ws.nc
        ids = nc.matrix_identities()
        for name, ok in ids.items():
            self.record("matrices", name, None, [("matrices", ok, True)])
        for m in self.ms:
            self.record("matrices", "Q^m U = kappa", m, [("vector", nc.park_vector(m), nc.kappa(m))])
            self.record("matrices", "Q^(m-1) R U = kappa+", m,
                        [("vector", nc.park_plus_vector(m), nc.kappa(m, plus=True))])
            N = nc.matrices["N"]
            self.record("matrices", "gamma = N kappa", m,
                        [("vector", self.ws.complex(m).gamma(), matvec(N, nc.kappa(m)))])
            self.record("matrices", "gamma+ = N kappa+", m,
                        [("vector", self.ws.complex(m).gamma(plus=True), matvec(N, nc.kappa(m, plus=True)))])

    def suite_faces(self):
        ws, lat, nc = self.ws, self.ws.lattice, self.ws.nc
        ctype = ws.system.ctype
        for m in self.ms:
            cx = ws.complex(m)
            self.record("faces", "facets = Cat^(m)", m, [
                ("all", cx.facets(), fuss_catalan(ctype)(m)),
                ("positive", cx.facets(plus=True), fuss_catalan(ctype, plus=True)(m))])
            self.record("faces", "h-vector = Narayana", m, [
                ("all", cx.h_vector(), nc.narayana(m)[::-1]),
                ("positive", cx.h_vector(plus=True), nc.narayana(m, plus=True)[::-1])])
            g, gp = cx.gamma(), cx.gamma(plus=True)
            mpoly = UniPoly((0, -1), "m")
            self.record("faces", "reciprocity", m, (
                pair for o in lat.orbits for pair in (
                    ((o.label, "gamma+"), gp[o.index], (-1) ** o.dim * nc.kappa_poly(o.index)(mpoly)(m)),
                    ((o.label, "gamma"), g[o.index], (-1) ** o.dim * nc.kappa_plus_poly(o.index)(mpoly)(m)))))
            self.record("faces", "rotation preserves faces and labels", m, self._rotation_pairs(cx))
            counts = cx.positive_product_counts()
            self.record("faces", "positive faces per product = Cat+ of the parabolic", m, (
                (i, counts.get(i, 0), fuss_catalan(lat.parabolic_type(r.flat), plus=True)(m))
                for i, r in enumerate(nc.items)))
            if not self.irreducible:
                for name in ("gamma closed form", "recursion over maximal parabolics", "rotation orbit sizes"):
                    self.record("faces", name, m, (), skipped=True)
                self.record("faces", "product rule", m, self._gamma_product_pairs(m))
                continue
            h = ws.system.coxeter_number()
            self.record("faces", "gamma closed form", m, (
                pair for o in lat.orbits for pair in (
                    ((o.label, "gamma"), g[o.index], gamma_closed_form(lat, o.index, m)),
                    ((o.label, "gamma+"), gp[o.index], gamma_closed_form(lat, o.index, m, plus=True)))))
            self.record("faces", "recursion over maximal parabolics", m, self._gamma_recursion_pairs(m))
            full = m * h + 2
            allowed = {full, full // 2} if full % 2 == 0 else {full}
            ok = all(len(cx.orbit(v)) in allowed for v in range(len(cx.vertices)))
            self.record("faces", "rotation orbit sizes", m, [("sizes", ok, True)])

    def _rotation_pairs(self, cx):
        for i, (face, _) in enumerate(cx.faces):
            j = cx.face_index.get(cx.rotate_face(face))
            if j is None:
                yield face, "not a face", "face"
                return
            yield face, cx.face_label(j), cx.face_label(i)

    def sub_gamma(self, J, m, plus=False):
        sub, _ = self.ws.sub(J)
        amb = self.ws.ambient_orbits(J)
        out = [0] * len(self.ws.lattice.orbits)
        for o, v in enumerate(sub.complex(m).gamma(plus)):
            out[amb[o]] += v
        return out

    def _gamma_recursion_pairs(self, m):
        lat = self.ws.lattice
        h = self.ws.system.coxeter_number()
        g = self.ws.complex(m).gamma()
        n = self.ws.system.rank
        subs = [self.sub_gamma([i for i in range(n) if i != s], m) for s in range(n)]
        for o in lat.orbits:
            if o.dim == 0:
                yield o.label, g[o.index], 1
            else:
                yield o.label, 2 * o.dim * g[o.index], (m * h + 2) * sum(sg[o.index] for sg in subs)

    def _components_of(self, w):
        """Split an NC element of a reducible system into orbits of its factors."""
        W = self.ws.system
        nc = self.ws.nc
        parts = []
        refl = nc.canonical_factorization(w)
        for comp in W.components:
            sub, par = self.ws.sub(comp)
            piece = W.product(t for t in refl if W.root_component(W.reflection_index[t]) ==
                              W.components.index(comp))
            parts.append((sub, sub.lattice.orbit_of(par.restrict(piece))))
        return parts

    def _gamma_product_pairs(self, m):
        lat, nc = self.ws.lattice, self.ws.nc
        g = self.ws.complex(m).gamma()
        for o in lat.orbits:
            prod = 1
            for sub, so in self._components_of(nc.orbit_representative(o.index)):
                prod *= sub.complex(m).gamma()[so]
            yield o.label, g[o.index], prod

    def suite_bijection(self):
        lat, nc = self.ws.lattice, self.ws.nc
        for m in self.ms:
            cx = self.ws.complex(m)

            def faces_round():
                for i, (face, _) in enumerate(cx.faces):
                    chain = cx.face_to_chain(face)
                    yield face, cx.chain_to_face(chain), face
                    yield (face, "label"), nc.item(chain[0]).orbit, cx.face_label(i)

            self.record("bijection", "faces -> chains -> faces", m, faces_round())
            self.record("bijection", "chains -> faces -> chains", m, (
                ([repr(x) for x in ch], cx.face_to_chain(cx.chain_to_face(ch)), ch) for ch in cx.chains()))

    def sub_phi(self, J):
        sub, _ = self.ws.sub(J)
        amb = self.ws.ambient_orbits(J)
        out = [UniPoly((), "q") for _ in self.ws.lattice.orbits]
        for o in sub.lattice.orbits:
            out[amb[o.index]] = out[amb[o.index]] + factor.phi(sub.nc, o.index)
        return out

    def suite_factorizations(self):
        ws, lat, nc = self.ws, self.ws.lattice, self.ws.nc
        phis = [factor.phi(nc, o.index) for o in lat.orbits]
        mpoly = UniPoly((0, -1), "m")
        self.record("factorizations", "phi = k!(1-q)^k gamma(q/(1-q))", None, (
            (o.label, phis[o.index],
             factor.phi_from_gamma(nc.kappa_plus_poly(o.index)(mpoly) * (-1) ** o.dim, o.dim))
            for o in lat.orbits))
        if not self.irreducible:
            for name in ("closed form", "phi(1) = k! h^k/[N:W_X]", "recursion over maximal parabolics",
                         "Steinberg census"):
                self.record("factorizations", name, None, (), skipped=True)
            self.record("factorizations", "product rule", None, self._phi_product_pairs(phis))
            return
        h = ws.system.coxeter_number()
        self.record("factorizations", "closed form", None, (
            (o.label, phis[o.index], factor.phi_closed_form(lat, o.index)) for o in lat.orbits))
        self.record("factorizations", "phi(1) = k! h^k/[N:W_X]", None, (
            (o.label, phis[o.index](1), Fraction(math.factorial(o.dim) * h ** o.dim, lat.normalizer_index(o.index)))
            for o in lat.orbits))
        n = ws.system.rank
        subs = [self.sub_phi([i for i in range(n) if i != s]) for s in range(n)]
        q = UniPoly.variable("q")

        def rec():
            for o in lat.orbits:
                if o.dim == 0:
                    yield o.label, phis[o.index], UniPoly.constant(1, "q")
                    continue
                total = UniPoly((), "q")
                for sp in subs:
                    total = total + sp[o.index]
                yield o.label, phis[o.index] * 2, (q * (h - 2) + 2) * total
        self.record("factorizations", "recursion over maximal parabolics", None, rec())
        self.record("factorizations", "Steinberg census", None, [("c", factor.steinberg_census(nc), True)])

    def _phi_product_pairs(self, phis):
        lat, nc = self.ws.lattice, self.ws.nc
        for o in lat.orbits:
            parts = self._components_of(nc.orbit_representative(o.index))
            rhs = UniPoly.constant(math.factorial(o.dim), "q")
            for sub, so in parts:
                rhs = rhs * factor.phi(sub.nc, so) / math.factorial(sub.lattice.orbits[so].dim)
            yield o.label, phis[o.index], rhs

    def suite_characters(self):
        table = table_for(self.ws)
        lat = self.ws.lattice
        n = self.ws.system.rank
        self.record("characters", "coset count = flat count", None, (
            (o.label, table.phi(o.index), table.phi_by_flats(o.index)) for o in lat.orbits))
        self.record("characters", "Psi_t = sum p_X(t)/[N:W_X] Phi_X", None, [
            ("coefficients", table.coefficients(table.psi()),
             [lat.orbit_char_poly(o.index) / lat.normalizer_index(o.index) for o in lat.orbits])])
        self.record("characters", "Psi_-1 = (-1)^n sign", None,
                    [("values", table.psi(-1), table.sign() * (-1) ** n)])
        self.record("characters", "Solomon", None, ((J, *solomon_sides(table, J)) for J in subsets(n)))
        for m in self.ms:
            self.record("characters", "park = Q^m U in the Burnside basis", m,
                        [("values", table.park(m), table.park_from_matrices(m))])
            self.record("characters", "park = abstract parking character", m,
                        [("values", table.park(m), table.park_abstract(m)),
                         ("plus", table.park(m, True), table.park_abstract(m, True))])
            self.record("characters", "park' = Psi_-1 (x) park_-m", m,
                        [("values", table.park(m, True), table.psi(-1) * table.park_at_negative(m))])
            self.record("characters", "inclusion-exclusion", m, [
                ("park", *inclusion_exclusion_sides(table, m)),
                ("park'", *inclusion_exclusion_sides(table, m, plus=True))])
            ctype = self.ws.system.ctype
            self.record("characters", "trivial multiplicities = Fuss-Catalan", m, [
                ("park", table.trivial_multiplicity(table.park(m)), fuss_catalan(ctype)(m)),
                ("park'", table.trivial_multiplicity(table.park(m, True)), fuss_catalan(ctype, plus=True)(m))])

    def suite_laplacian(self):
        lat = self.ws.lattice
        nflats = len(lat.flats)
        self.record("laplacian", "Coxeter-number product identity", None, (
            ((x, z), *laplacian_sides(lat, x, z))
            for x in range(nflats) for z in range(nflats) if lat.leq(z, x)))
        if not self.irreducible:
            self.record("laplacian", "regions identity", None, (), skipped=True)
            return
        self.record("laplacian", "regions identity", None, ((z, *regions_sides(lat, z)) for z in range(nflats)))


def run_checks(ws: Workspace, suites, ms=(1, 2, 3), inject_fault: bool = False) -> list[CheckResult]:
    if "all" in suites:
        suites = SUITES
    return Checker(ws, ms, inject_fault).run(suites)
