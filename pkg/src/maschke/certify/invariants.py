"""Invariance of a polynomial under generators, and Molien dimensions."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .. import kbatch
from ..exactfield import DEGREE
from ..groupcore import GroupClosure
from ..polyalg import Poly, compose_linear

MOLIEN_MAX_DEGREE = 12


class NonIntegerResult(ArithmeticError):
    pass


def verify_invariance(f: Poly, gens) -> bool:
    return all(compose_linear(f, g) == f for g in gens)


def non_invariant_generators(f: Poly, gens) -> list[int]:
    return [k for k, g in enumerate(gens) if compose_linear(f, g) != f]


def elementary_symmetric(nums: np.ndarray) -> list[np.ndarray]:
    """e_1..e_4 of the eigenvalues of each matrix in a (n, 4, 4, 8) batch.

    e_k is the sum of the principal k x k minors.
    """
    size = nums.shape[1]
    out = []
    for k in range(1, size + 1):
        total = None
        for idx in combinations(range(size), k):
            sub = nums[:, idx][:, :, idx]
            minor = kbatch.kdet(sub)
            total = minor if total is None else total + minor
        out.append(total)
    return out


def molien_coefficients(group: GroupClosure, max_degree: int) -> list[int]:
    """Dimensions of invariant forms of degrees 0..max_degree.

    For each element, 1/det(I - t g) is expanded as a power series by
    inverting 1 - e1 t + e2 t^2 - e3 t^3 + e4 t^4 term by term; the series
    are summed over the group and divided by its order.
    """
    if not 0 <= max_degree <= MOLIEN_MAX_DEGREE:
        raise ValueError(f"degree must lie in [0, {MOLIEN_MAX_DEGREE}]")
    nums, den = group.common_denominator()
    n = nums.shape[0]
    e = elementary_symmetric(nums)
    one = np.zeros((n, DEGREE), dtype=np.int64)
    one[:, 0] = 1
    # h[d] holds den**d times the degree-d series coefficient of each element
    h = [one]
    for d in range(1, max_degree + 1):
        acc = None
        for k in range(1, min(d, len(e)) + 1):
            term = kbatch.kmul(e[k - 1], h[d - k])
            if k % 2 == 0:
                term = -term
            acc = term if acc is None else acc + term
        h.append(acc)

    dims = []
    for d, hd in enumerate(h):
        total = [int(v) for v in hd.astype(object).sum(axis=0)]
        if any(total[1:]):
            raise NonIntegerResult(f"degree {d}: irrational Molien coefficient")
        scale = den**d * group.order
        if total[0] % scale or total[0] < 0:
            raise NonIntegerResult(f"degree {d}: {total[0]}/{scale} is not a nonnegative integer")
        dims.append(total[0] // scale)
    return dims


def molien_invariant_dimension(group: GroupClosure, degree: int) -> int:
    return molien_coefficients(group, degree)[degree]


def reynolds_linear_is_zero(group: GroupClosure) -> bool:
    """True when the group average of every matrix entry vanishes.

    Averaging the coordinate functions over the group then gives zero, so
    there is no invariant linear form.
    """
    nums, _ = group.common_denominator()
    return not np.any(nums.astype(object).sum(axis=0))
