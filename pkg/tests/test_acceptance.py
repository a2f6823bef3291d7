"""Exit criteria.  Each test is one criterion; the terminal summary prints a
PASS/FAIL line per criterion (see conftest.py).  All checks are exact."""

import random
from fractions import Fraction
from math import comb

import pytest

from maschke.certify import (
    DuplicateLines,
    SingularPointFound,
    miyaoka_bound,
    molien_coefficients,
    rams_bound,
    reynolds_linear_is_zero,
    smoothness_certificate,
    verify_disjoint_family,
)
from maschke.exactfield import ONE, FieldElement
from maschke.geom import Line, act, line_160, line_192, line_on_surface, lines_disjoint
from maschke.groupcore import GeneratorSet, MatrixK, builtin_generators, closure, contains
from maschke.polyalg import Poly, build_maschke_f, compose_linear, partial_derivative

G31 = builtin_generators("G31")
AB = builtin_generators("AB")
F = build_maschke_f()


@pytest.mark.criterion(1, "group orders 1152 and 46080 (shuffled-closure oracle)")
def test_c01_group_orders(pipe):
    assert pipe.closure_ab.order == 1152
    assert pipe.closure_g31.order == 46080
    rng = random.Random(31)
    order = list(G31)
    rng.shuffle(order)
    again = closure(GeneratorSet("G31-shuffled", order), rng=rng)
    assert again.order == 46080
    assert set(again._index) == set(pipe.closure_g31._index)


@pytest.mark.criterion(2, "a and b belong to G31")
def test_c02_membership(g31):
    assert contains(g31, AB[0])
    assert contains(g31, AB[1])


@pytest.mark.criterion(3, "s1..s5 square to the identity")
def test_c03_involutions():
    ident = MatrixK.identity()
    for s in G31:
        assert s * s == ident
        assert s != ident


@pytest.mark.criterion(4, "f is fixed by s1..s5, a, b")
def test_c04_invariance():
    for g in list(G31) + list(AB):
        assert compose_linear(F, g) == F


@pytest.mark.criterion(5, "Molien dimension 1 in degree 8, 0 in degree 1")
def test_c05_molien(g31):
    dims = molien_coefficients(g31, 8)
    assert dims[8] == 1
    assert dims[1] == 0
    assert reynolds_linear_is_zero(g31)


@pytest.mark.criterion(6, "orbits of L160 and L192 have 160 and 192 lines, disjoint, 352 total")
def test_c06_orbits(pipe):
    o160, o192 = pipe.orbit160, pipe.orbit192
    assert len(o160) == 160
    assert len(o192) == 192
    assert not (o160 & o192)
    assert len(o160 | o192) == 352


@pytest.mark.criterion(7, "all 352 lines lie on the octic")
def test_c07_incidence(pipe):
    lines = pipe.orbit160 | pipe.orbit192
    assert len(lines) == 352
    off = [ln for ln in lines if not line_on_surface(ln, F)]
    assert not off, f"{len(off)} lines off the surface, first {off[0]!r}"


@pytest.mark.criterion(8, "<a,b>-orbit of L192: 96 lines inside the 192-orbit, 4560 disjoint pairs")
def test_c08_main_theorem(pipe):
    fam = pipe.family96
    assert len(fam) == 96
    assert fam <= pipe.orbit192
    cert = verify_disjoint_family(sorted(fam, key=lambda x: x.sort_key()))
    assert cert.passed, f"meeting pair: {cert.witness}"
    assert cert.pairs_checked == comb(96, 2) == 4560


@pytest.mark.criterion(9, "96 = miyaoka_bound(8) = 2*8*6 and rams_bound(8) = 50")
def test_c09_bounds(pipe):
    assert miyaoka_bound(8) == 2 * 8 * 6 == 96 == len(pipe.family96)
    assert rams_bound(8) == 50


@pytest.mark.criterion(10, "empty singular scan of P^3(F_p) for some p in {5,...,23}")
def test_c10_smoothness():
    passes = []
    for p in (5, 7, 11, 13, 17, 19, 23):
        try:
            cert = smoothness_certificate(F, p)
        except SingularPointFound:
            continue
        assert cert.prime == p
        assert cert.points_scanned == p**3 + p**2 + p + 1
        passes.append(cert)
    assert passes
    # at least one of them also excludes singular points over the algebraic closure
    assert any(c.geometric for c in passes)


@pytest.mark.criterion(11, "negative controls: 14->15, duplicated line, L160 vs s5(L160)")
def test_c11_negative_controls(pipe):
    bad = build_maschke_f(c44=15)
    assert any(compose_linear(bad, g) != bad for g in list(G31) + list(AB))

    fam = sorted(pipe.family96, key=lambda x: x.sort_key())
    with pytest.raises(DuplicateLines):
        verify_disjoint_family(fam + [fam[17]])

    image = act(G31[4], line_160())
    assert not lines_disjoint(line_160(), image)
    cert = verify_disjoint_family([line_160(), image])
    assert not cert.passed and cert.witness["common_point"] is not None


def _random_element(rng):
    return FieldElement([Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(8)])


@pytest.mark.criterion(12, "property suites: field axioms, Euler, RREF idempotence, act homomorphism")
def test_c12_property_suites(pipe, g31):
    rng = random.Random(12)
    for _ in range(1000):
        a, b, c = (_random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == ONE

    euler = sum((Poly.var(k) * partial_derivative(F, k) for k in range(4)), Poly())
    assert F * 8 == euler

    for ln in pipe.orbit160 | pipe.orbit192:
        assert Line(ln.span).span == ln.span

    seeds = [line_160(), line_192()]
    for _ in range(100):
        g = g31.element(rng.randrange(g31.order))
        h = g31.element(rng.randrange(g31.order))
        ln = rng.choice(seeds)
        assert act(g * h, ln) == act(g, act(h, ln))
