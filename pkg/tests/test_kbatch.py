import random

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from maschke import kbatch
from maschke.exactfield import FieldElement
from maschke.groupcore import GeneratorSet, MatrixK, builtin_generators, closure, mat_inv
from maschke.linalg import det

small = st.lists(st.integers(-9, 9), min_size=8, max_size=8)
huge = st.lists(st.integers(-(2**70), 2**70), min_size=8, max_size=8)


@settings(max_examples=200)
@given(st.one_of(small, huge), st.one_of(small, huge))
def test_kmul_matches_scalar_product(u, v):
    got = kbatch.kmul(np.array(u, dtype=object), np.array(v, dtype=object))
    want = FieldElement.from_parts(u) * FieldElement.from_parts(v)
    assert FieldElement.from_parts([int(x) for x in got]) == want


def test_kmul_int64_path_stays_int64():
    x = np.arange(16, dtype=np.int64).reshape(2, 8)
    assert kbatch.kmul(x, x).dtype == np.int64


def test_kdet_matches_elimination():
    rng = random.Random(3)
    for scale in (5, 2**40):
        rows = [[[rng.randint(-scale, scale) if rng.random() < 0.4 else 0 for _ in range(8)]
                 for _ in range(4)] for _ in range(4)]
        arr = np.array(rows, dtype=object)
        got = kbatch.kdet(arr)
        want = det([[FieldElement.from_parts(e) for e in row] for row in rows])
        assert FieldElement.from_parts([int(x) for x in got]) == want


def test_right_mult_operator():
    a, b = builtin_generators("AB")
    an, aden = a.pack()
    bn, bden = b.pack()
    r = kbatch.right_mult_operator(bn)
    prod = kbatch.exact_matmul(an.reshape(1, -1), r)
    assert MatrixK.unpack(prod[0], aden * bden) == a * b


def test_exact_matmul_large_values():
    x = np.array([[2**60, -(2**61), 3]], dtype=object)
    r = np.array([[1, 0], [2, 1], [0, 5]], dtype=object)
    out = kbatch.exact_matmul(x, r)
    assert [int(v) for v in out[0]] == [2**60 - 2**62, -(2**61) + 15]


def test_normalize_rows():
    num = np.array([[4, 6, 0], [0, 0, 0], [-3, 9, 12]], dtype=np.int64)
    den = np.array([2, 5, -3], dtype=np.int64)
    n2, d2 = kbatch.normalize_rows(num, den)
    assert n2.tolist() == [[2, 3, 0], [0, 0, 0], [1, -3, -4]]
    assert d2.tolist() == [1, 1, 1]


def test_closure_with_big_entries_uses_exact_fallback():
    # conjugating by a matrix with huge entries forces Python-int arithmetic
    big = 2**40 + 1
    p = MatrixK([[1, big, 0, 0], [0, 1, 0, 0], [0, 0, 1, big], [0, 0, 0, 1]])
    pinv = mat_inv(p)
    conj = GeneratorSet("conj", tuple(p * g * pinv for g in builtin_generators("AB")))
    group = closure(conj)
    assert group.order == 1152
    assert group.nums.dtype == object
    assert p * builtin_generators("AB")[0] * pinv in group
