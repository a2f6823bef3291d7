"""4x4 matrices over K, the built-in generators, group closure and orbits."""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import kbatch
from .exactfield import DEGREE, I, ONE, ZERO, FieldElement, fe
from .linalg import det, rref

N = 4
MATRIX_CAP = 100_000
ORBIT_CAP = 1_000


class SingularMatrix(ValueError):
    pass


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, what: str = "closure"):
        super().__init__(f"{what} grew past cap={cap}")
        self.cap = cap


class MatrixK:
    """Immutable 4x4 matrix over K; ``rows`` is a tuple of 4-tuples of FieldElement."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(fe(v) for v in row) for row in rows)
        if len(rows) != N or any(len(r) != N for r in rows):
            raise ValueError("MatrixK must be 4x4")
        self.rows = rows
        self._hash = hash(rows)

    @classmethod
    def identity(cls) -> MatrixK:
        return cls([[ONE if i == j else ZERO for j in range(N)] for i in range(N)])

    @classmethod
    def scalar(cls, c) -> MatrixK:
        c = fe(c)
        return cls([[c if i == j else ZERO for j in range(N)] for i in range(N)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, MatrixK):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if isinstance(other, MatrixK):
            return mat_mul(self, other)
        c = fe(other)
        return MatrixK([[c * v for v in row] for row in self.rows])

    __rmul__ = __mul__

    def apply(self, vec) -> tuple:
        """Matrix times column vector."""
        vec = [fe(v) for v in vec]
        out = []
        for row in self.rows:
            s = ZERO
            for a, b in zip(row, vec):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def det(self) -> FieldElement:
        return det(self.rows)

    def inverse(self) -> MatrixK:
        return mat_inv(self)

    def pack(self) -> tuple[np.ndarray, int]:
        """Canonical (numerators of shape (4, 4, 8), common denominator) form."""
        den = 1
        for row in self.rows:
            for v in row:
                den = den * v.denominator // math.gcd(den, v.denominator)
        nums = [
            [[n * (den // v.denominator) for n in v.numerators] for v in row] for row in self.rows
        ]
        arr = np.array(nums, dtype=object)
        arr = kbatch.as_exact(arr, kbatch.max_abs(arr))
        return arr, den

    @classmethod
    def unpack(cls, nums: np.ndarray, den: int) -> MatrixK:
        nums = np.asarray(nums).reshape(N, N, DEGREE)
        den = int(den)
        return cls(
            [[FieldElement.from_parts(nums[i, j].tolist(), den) for j in range(N)] for i in range(N)]
        )

    def __repr__(self):
        return "MatrixK([" + ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows) + "])"


def mat_mul(a: MatrixK, b: MatrixK) -> MatrixK:
    cols = list(zip(*b.rows))
    out = []
    for row in a.rows:
        out_row = []
        for col in cols:
            s = ZERO
            for x, y in zip(row, col):
                if x and y:
                    s = s + x * y
            out_row.append(s)
        out.append(out_row)
    return MatrixK(out)


def mat_inv(a: MatrixK) -> MatrixK:
    aug = [list(row) + [ONE if i == j else ZERO for j in range(N)] for i, row in enumerate(a.rows)]
    red, pivots = rref(aug)
    if pivots[:N] != list(range(N)):
        raise SingularMatrix("matrix is not invertible")
    return MatrixK([row[N:] for row in red])


def mat_pow(a: MatrixK, n: int) -> MatrixK:
    result = MatrixK.identity()
    for _ in range(n):
        result = result * a
    return result


def element_order(a: MatrixK, limit: int = 10_000) -> int:
    ident = MatrixK.identity()
    power = a
    for k in range(1, limit + 1):
        if power == ident:
            return k
        power = power * a
    raise CapExceeded(limit, "element order")


@dataclass(frozen=True)
class GeneratorSet:
    name: str
    matrices: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        for m in self.matrices:
            if not m.det():
                raise SingularMatrix(f"generator of {self.name} is singular")

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self):
        return len(self.matrices)

    def __getitem__(self, k):
        return self.matrices[k]


def _m(rows, scale=1):
    return MatrixK(rows) * fe(scale)


def builtin_generators(which: str) -> GeneratorSet:
    """``"G31"`` gives the reflections s1..s5, ``"AB"`` gives a and b."""
    i = I
    if which == "G31":
        s1 = _m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        s2 = _m([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        s3 = _m([[0, -i, 0, 0], [i, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        s4 = _m(
            [[1, -1, -1, -1], [-1, 1, -1, -1], [-1, -1, 1, -1], [-1, -1, -1, 1]],
            Fraction(1, 2),
        )
        s5 = _m([[-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
        return GeneratorSet("G31", (s1, s2, s3, s4, s5))
    if which == "AB":
        a = _m([[1, 0, 0, 1], [0, 1, 1, 0], [0, -1, 1, 0], [1, 0, 0, -1]], (1 - i) / 2)
        b = _m([[0, 0, -1, 0], [-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
        return GeneratorSet("AB", (a, b))
    raise ValueError(f"unknown generator set {which!r}")


def _row_key(row: list, den) -> tuple:
    return (int(den), *row)


@dataclass
class GroupClosure:
    """Finished closure, stored as packed canonical rows.

    ``nums`` has shape (order, 128) and ``dens`` shape (order,); row k is
    element k.  Membership goes through the canonical key.
    """

    generators: GeneratorSet
    nums: np.ndarray
    dens: np.ndarray
    _index: dict = field(repr=False)

    @property
    def order(self) -> int:
        return len(self._index)

    def __len__(self):
        return self.order

    def __contains__(self, m: MatrixK) -> bool:
        nums, den = m.pack()
        return _row_key(nums.reshape(-1).tolist(), den) in self._index

    def element(self, k: int) -> MatrixK:
        return MatrixK.unpack(self.nums[k], self.dens[k])

    def __iter__(self) -> Iterator[MatrixK]:
        for k in range(self.order):
            yield self.element(k)

    @property
    def elements(self) -> Iterator[MatrixK]:
        return iter(self)

    def common_denominator(self) -> tuple[np.ndarray, int]:
        """All elements as integer numerators (order, 4, 4, 8) over one denominator."""
        dens = [int(d) for d in self.dens]
        big = math.lcm(*dens) if dens else 1
        scale = np.array([big // d for d in dens], dtype=object)
        top = max(big // d for d in dens)
        bound = max(kbatch.max_abs(self.nums) * top, top)
        nums = kbatch.as_exact(self.nums, bound) * kbatch.as_exact(scale, bound)[:, None]
        return nums.reshape(-1, N, N, DEGREE), big


def contains(group: GroupClosure, m: MatrixK) -> bool:
    return m in group


def _normalize_seed(gens) -> GeneratorSet:
    if isinstance(gens, GeneratorSet):
        return gens
    return GeneratorSet("custom", tuple(gens))


def closure(gens, cap: int = MATRIX_CAP, rng: random.Random | None = None) -> GroupClosure:
    """All products of the generators, by breadth-first right multiplication.

    With ``rng`` the generator order and every BFS layer are shuffled; the
    resulting set must not depend on it.
    """
    gens = _normalize_seed(gens)
    ops = []
    for g in gens:
        gnum, gden = g.pack()
        ops.append((kbatch.right_mult_operator(gnum), gden))

    ident_nums, _ = MatrixK.identity().pack()
    frontier = ident_nums.reshape(1, -1)
    frontier_den = np.array([1], dtype=np.int64)
    index = {_row_key(frontier[0].tolist(), 1): 0}
    all_nums = [frontier]
    all_dens = [frontier_den]

    while len(frontier):
        order = list(range(len(ops)))
        if rng is not None:
            rng.shuffle(order)
            perm = list(range(len(frontier)))
            rng.shuffle(perm)
            frontier = frontier[perm]
            frontier_den = frontier_den[perm]
        new_nums, new_dens = [], []
        for k in order:
            r, gden = ops[k]
            prod = kbatch.exact_matmul(frontier, r)
            pden = frontier_den * gden
            prod, pden = kbatch.normalize_rows(prod, pden)
            rows = prod.tolist()
            dens = pden.tolist()
            fresh = []
            for j, (row, d) in enumerate(zip(rows, dens)):
                key = _row_key(row, d)
                if key not in index:
                    index[key] = len(index)
                    fresh.append(j)
                    if len(index) > cap:
                        raise CapExceeded(cap)
            if fresh:
                new_nums.append(prod[fresh])
                new_dens.append(pden[fresh])
        if not new_nums:
            break
        dtype = object if any(x.dtype == object for x in new_nums) else np.int64
        frontier = np.concatenate([x.astype(dtype) for x in new_nums])
        frontier_den = np.concatenate(new_dens)
        all_nums.append(frontier)
        all_dens.append(frontier_den)

    dtype = object if any(x.dtype == object for x in all_nums) else np.int64
    nums = np.concatenate([x.astype(dtype) for x in all_nums])
    dens = np.concatenate([np.asarray(d, dtype=object if dtype == object else np.int64) for d in all_dens])
    return GroupClosure(gens, nums, dens, index)


def orbit(gens, seed, act: Callable, cap: int = ORBIT_CAP) -> set:
    """Breadth-first orbit of ``seed`` under the generators via ``act(g, x)``."""
    mats = list(gens)
    seen = {seed}
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for g in mats:
            y = act(g, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise CapExceeded(cap, "orbit")
                queue.append(y)
    return seen
