"""Batched exact arithmetic over K on numpy integer arrays.

Elements are integer arrays whose last axis holds the 8 coordinates; a
denominator is carried separately by the caller.  Every routine chooses
its dtype from an a-priori bound on the result: int64 when the bound fits,
Python ints (object dtype) otherwise, so results are always exact.
"""

from __future__ import annotations

import numpy as np

from .exactfield import DEGREE, STRUCTURE

# headroom so that callers may add up to 2**7 results without overflow
_INT64_SAFE = 2**55
_FLOAT_SAFE = 2**53

_SC_MAX = max(abs(c) for row in STRUCTURE for c in row)


def max_abs(x: np.ndarray) -> int:
    if x.size == 0:
        return 0
    return int(np.abs(x).max())


def as_exact(x: np.ndarray, bound: int) -> np.ndarray:
    """Return ``x`` as int64 if ``bound`` fits, else as an object array."""
    if bound < _INT64_SAFE:
        return x.astype(np.int64) if x.dtype != np.int64 else x
    return x.astype(object) if x.dtype != object else x


def kmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Elementwise product in K of two broadcastable (..., 8) integer arrays."""
    mx, my = max_abs(x), max_abs(y)
    # the inputs themselves must fit too, even when the product bound is 0
    bound = max(mx * my * _SC_MAX * DEGREE, mx, my)
    xs = np.moveaxis(as_exact(x, bound), -1, 0)
    ys = np.moveaxis(as_exact(y, bound), -1, 0)
    # ascontiguousarray would promote 0-d coordinates to shape (1,)
    xs = [np.ascontiguousarray(v) if np.ndim(v) else v for v in xs]
    ys = [np.ascontiguousarray(v) if np.ndim(v) else v for v in ys]
    coords = []
    for c in range(DEGREE):
        acc = None
        for a in range(DEGREE):
            b = a ^ c
            term = xs[a] * ys[b]
            k = STRUCTURE[a][b]
            if k != 1:
                term = term * k
            acc = term if acc is None else acc + term
        coords.append(acc)
    return np.stack(coords, axis=-1)


def kdet(m: np.ndarray) -> np.ndarray:
    """Determinant of a batch of square matrices, shape (..., n, n, 8)."""
    n = m.shape[-2]
    if n == 1:
        return m[..., 0, 0, :]
    if n == 2:
        return kmul(m[..., 0, 0, :], m[..., 1, 1, :]) - kmul(m[..., 0, 1, :], m[..., 1, 0, :])
    total = None
    for j in range(n):
        cols = [c for c in range(n) if c != j]
        minor = m[..., 1:, :, :][..., :, cols, :]
        term = kmul(m[..., 0, j, :], kdet(minor))
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def right_mult_operator(num: np.ndarray) -> np.ndarray:
    """Integer matrix R with vec(A) @ R == vec(A @ G) for 4x4 K-matrices.

    ``num`` is the (4, 4, 8) numerator array of G.  vec flattens (row, col,
    coord) in C order, so the operator has shape (128, 128).
    """
    n = num.shape[0]
    dtype = num.dtype
    r = np.zeros((n, n, DEGREE, n, n, DEGREE), dtype=dtype)
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for a in range(DEGREE):
                    for b in range(DEGREE):
                        if num[k, j, b]:
                            r[i, k, a, i, j, a ^ b] += STRUCTURE[a][b] * num[k, j, b]
    return r.reshape(n * n * DEGREE, n * n * DEGREE)


def exact_matmul(x: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Exact integer product ``x @ r`` for 2-D integer arrays.

    When every partial sum is bounded by 2**53 the product goes through
    float64 BLAS, which is then exact; otherwise int64 or Python ints.
    """
    colsum = np.abs(r.astype(object)).sum(axis=0).max() if r.size else 0
    bound = max(max_abs(x) * int(colsum), max_abs(x), int(colsum))
    if bound < _FLOAT_SAFE:
        return np.rint(x.astype(np.float64) @ r.astype(np.float64)).astype(np.int64)
    x = as_exact(x, bound)
    r = as_exact(r, bound)
    return x @ r


def normalize_rows(num: np.ndarray, den: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Divide each row of numerators and its denominator by their gcd."""
    flat = num.reshape(num.shape[0], -1)
    g = np.gcd.reduce(np.concatenate([flat, den[:, None]], axis=1), axis=1)
    g = np.where(g == 0, 1, g)
    sign = np.where(den < 0, -1, 1)
    g = g * sign
    out = (flat // g[:, None]).reshape(num.shape)
    return out, den // g
