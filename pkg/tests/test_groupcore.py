import random
from fractions import Fraction

import pytest

from maschke.exactfield import I, ONE, ZERO, fe
from maschke.geom import act, line_160, line_192
from maschke.groupcore import (
    CapExceeded,
    GeneratorSet,
    MatrixK,
    SingularMatrix,
    builtin_generators,
    closure,
    contains,
    element_order,
    mat_inv,
    mat_mul,
    orbit,
)

G31 = builtin_generators("G31")
AB = builtin_generators("AB")
IDENT = MatrixK.identity()


def test_generator_entries():
    s4 = G31[3]
    a, b = AB
    assert s4[0, 0] == Fraction(1, 2)
    assert s4[0, 1] == Fraction(-1, 2)
    assert a[0, 0] == (1 - I) / 2
    assert a[3, 3] == -(1 - I) / 2
    assert b[0, 2] == -1
    assert G31[2][0, 1] == -I and G31[2][1, 0] == I


@pytest.mark.parametrize("k", range(5))
def test_reflections_are_involutions(k):
    s = G31[k]
    assert mat_mul(s, s) == IDENT
    assert s != IDENT
    assert element_order(s) == 2


def test_matrix_inverse():
    a = AB[0]
    assert mat_mul(mat_inv(a), a) == IDENT
    assert mat_mul(a, mat_inv(a)) == IDENT


def test_singular_matrix():
    m = MatrixK([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(SingularMatrix):
        mat_inv(m)
    with pytest.raises(SingularMatrix):
        GeneratorSet("bad", (m,))


def test_pack_roundtrip():
    for g in list(G31) + list(AB):
        nums, den = g.pack()
        assert MatrixK.unpack(nums, den) == g


def test_closure_ab(ab_group):
    assert ab_group.order == 1152


def test_closure_g31(g31):
    assert g31.order == 46080


def test_closure_trivial():
    assert closure([IDENT]).order == 1


def test_closure_independent_of_generator_order():
    gens = GeneratorSet("BA", (AB[1], AB[0]))
    shuffled = closure(gens, rng=random.Random(7))
    plain = closure(AB)
    assert shuffled.order == plain.order == 1152
    assert set(shuffled._index) == set(plain._index)


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        closure(AB, cap=100)


def test_infinite_group_hits_cap():
    shear = MatrixK([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(CapExceeded):
        closure([shear], cap=50)


def test_membership(g31, ab_group):
    assert contains(g31, AB[0])
    assert contains(g31, AB[1])
    assert not contains(ab_group, MatrixK.scalar(2))
    assert contains(g31, IDENT)


def test_inverses_present(g31):
    rng = random.Random(1)
    for k in rng.sample(range(g31.order), 100):
        g = g31.element(k)
        assert contains(g31, mat_inv(g))


def test_closed_under_generators(g31):
    rng = random.Random(2)
    for k in rng.sample(range(g31.order), 50):
        g = g31.element(k)
        for s in G31:
            assert contains(g31, g * s)
            assert contains(g31, s * g)


def test_subgroup_order_divides(g31, ab_group):
    assert g31.order % ab_group.order == 0
    assert all(contains(g31, ab_group.element(k)) for k in range(0, 1152, 37))


def test_scalars_are_distinct_elements(g31):
    # -1 is in G31 as a matrix even though it acts trivially on P^3
    assert contains(g31, MatrixK.scalar(-1))
    assert contains(g31, MatrixK.scalar(I))


def test_orbit_sizes(pipe, g31, ab_group):
    assert len(pipe.orbit160) == 160
    assert len(pipe.orbit192) == 192
    assert len(pipe.family96) == 96
    for size in (160, 192):
        assert g31.order % size == 0
    assert ab_group.order % 96 == 0


def test_orbit_contains_seed(pipe):
    assert line_160() in pipe.orbit160
    assert line_192() in pipe.family96


def test_orbit_generator_stable(pipe):
    for ln in pipe.orbit192:
        for g in G31:
            assert act(g, ln) in pipe.orbit192


def test_orbit_cap():
    with pytest.raises(CapExceeded):
        orbit(G31, line_192(), act, cap=10)


def test_orbit_generic_action():
    # the hook is generic: orbit of a vector under sign changes and swaps
    def apply(g, v):
        return g.apply(v)

    seed = (ONE, ZERO, ZERO, ZERO)
    out = orbit([G31[0], G31[1], G31[4]], seed, apply)
    assert len(out) == 6
    assert (fe(-1), ZERO, ZERO, ZERO) in out
