import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maschke.exactfield import I, ONE, SQRT3, SQRT5, ZERO, fe
from maschke.geom import (
    DependentForms,
    Line,
    PointP3,
    act,
    coordinate_line,
    intersection_point,
    line_160,
    line_192,
    line_from_forms,
    line_on_surface,
    lines_disjoint,
    stacked_det,
)
from maschke.groupcore import MatrixK, builtin_generators
from maschke.linalg import det, rref
from maschke.polyalg import build_maschke_f

F = build_maschke_f()
G31 = builtin_generators("G31")
C160 = (I + 1) * (SQRT3 + 1)


def test_coordinate_line_from_forms():
    ln = line_from_forms((1, 0, 0, 0), (0, 1, 0, 0))
    assert ln.span == ((ZERO, ZERO, ONE, ZERO), (ZERO, ZERO, ZERO, ONE))


def test_line_160_contains_point():
    point = (-C160, 2, 0, 0)
    # both defining forms vanish at the point
    assert 2 * point[0] + C160 * point[1] == 0
    assert line_160().contains_point(point)


def test_line_192_is_rank_two():
    ln = line_192()
    assert len(rref(ln.span)[1]) == 2
    f1 = ((I + 1) * (SQRT5 + 1), -2, -2, 0)
    f2 = (0, 2, -2, (I - 1) * (SQRT5 + 1))
    for row in ln.span:
        for form in (f1, f2):
            assert sum((fe(c) * v for c, v in zip(form, row)), ZERO) == 0


def test_dependent_forms():
    with pytest.raises(DependentForms):
        line_from_forms((1, 2, 0, 0), (2, 4, 0, 0))


def test_act_identity_and_scalars():
    for ln in (line_160(), line_192()):
        assert act(MatrixK.identity(), ln) == ln
        assert act(MatrixK.scalar(-1), ln) == ln
        assert act(MatrixK.scalar(I), ln) == ln


def test_rref_idempotent(pipe):
    for ln in list(pipe.all_lines)[:60]:
        assert Line(ln.span) == ln
        assert Line(ln.span).span == ln.span


def test_canonical_form_ignores_basis_choice():
    ln = line_192()
    r0, r1 = ln.span
    other = Line([[a + 3 * b for a, b in zip(r0, r1)], [I * a - b for a, b in zip(r0, r1)]])
    assert other == ln and hash(other) == hash(ln)


def test_disjoint_examples():
    ln = line_160()
    assert not lines_disjoint(ln, ln)
    assert lines_disjoint(coordinate_line(0, 1), coordinate_line(2, 3))


def test_l160_meets_its_s5_image():
    s5 = G31[4]
    image = act(s5, line_160())
    assert not lines_disjoint(line_160(), image)
    # (0 : 0 : (i+1)(sqrt3+1) : -2) lies on both lines
    point = (0, 0, C160, -2)
    assert 2 * point[2] + C160 * point[3] == 0
    assert line_160().contains_point(point)
    assert image.contains_point(point)
    assert intersection_point(line_160(), image) == PointP3(point)


def test_stacked_det_matches_elimination(pipe):
    lines = sorted(pipe.orbit192, key=lambda x: x.sort_key())[:12]
    for a in lines[:4]:
        for b in lines:
            assert stacked_det(a, b) == det([*a.span, *b.span])


def test_disjoint_symmetric(pipe):
    lines = sorted(pipe.all_lines, key=lambda x: x.sort_key())[:30]
    for a in lines:
        for b in lines:
            assert lines_disjoint(a, b) == lines_disjoint(b, a)


def test_line_on_surface_examples():
    assert line_on_surface(line_160(), F)
    assert line_on_surface(line_192(), F)
    assert not line_on_surface(coordinate_line(0, 1), F)


def test_all_orbit_lines_on_surface(pipe):
    assert all(line_on_surface(ln, F) for ln in pipe.all_lines)


def test_json_roundtrip():
    ln = line_192()
    assert Line.from_json(ln.to_json()) == ln


@settings(max_examples=100)
@given(st.data())
def test_act_is_a_homomorphism(g31, data):
    k1 = data.draw(st.integers(0, g31.order - 1))
    k2 = data.draw(st.integers(0, g31.order - 1))
    ln = data.draw(st.sampled_from([line_160(), line_192(), coordinate_line(0, 2)]))
    g, h = g31.element(k1), g31.element(k2)
    assert act(g * h, ln) == act(g, act(h, ln))


@settings(max_examples=100)
@given(st.data())
def test_incidence_is_group_invariant(g31, data):
    g = g31.element(data.draw(st.integers(0, g31.order - 1)))
    for ln in (line_160(), line_192(), coordinate_line(1, 3)):
        assert line_on_surface(act(g, ln), F) == line_on_surface(ln, F)
