"""Smoothness of a projective surface via reduction modulo a prime.

Over F_p every point of P^3(F_p) is tested against f and its four partial
derivatives.  An empty rational scan alone does not exclude singular points
defined over extensions of F_p, so a certificate is only marked
``geometric`` when the reduced gradient also has no common zero over the
algebraic closure.  The criterion used is a diagonal gradient: each
partial derivative reduces to ``c * x_k**e`` with ``c`` a unit, whose only
common zero is the origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..exactfield import BadPrime, NonRational, fe_reduce_mod_p, is_odd_prime
from ..polyalg import NVARS, Poly, gradient

JUSTIFICATION = (
    "The singular locus of f = 0 is a closed subscheme of P^3 over Z, proper over Spec Z, "
    "so its image in Spec Z is closed. If the fibre over p is empty (no common zero of f "
    "and its partials over the algebraic closure of F_p) the image misses p, hence cannot "
    "contain the generic point: the surface is smooth over Q and therefore over C."
)


class SingularPointFound(Exception):
    """A point of P^3(F_p) where f and all partials vanish; inconclusive for char 0."""

    def __init__(self, prime: int, witness: tuple):
        super().__init__(f"singular point {witness} modulo {prime}")
        self.prime = prime
        self.witness = witness


@dataclass
class SmoothnessCertificate:
    prime: int
    points_scanned: int
    geometric: bool
    reduced_f: dict = field(repr=False)
    justification: str = JUSTIFICATION

    @property
    def complete(self) -> bool:
        return self.geometric

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "points_scanned": self.points_scanned,
            "rational_scan_empty": True,
            "geometric": self.geometric,
            "reduced_f": {"".join(map(str, m)): c for m, c in sorted(self.reduced_f.items())},
            "justification": self.justification if self.geometric else None,
        }


def reduce_poly(p: Poly, prime: int) -> dict:
    out = {}
    for mono, c in p:
        try:
            v = fe_reduce_mod_p(c, prime).value
        except NonRational:
            raise BadPrime(f"coefficient {c} is not rational") from None
        if v:
            out[mono] = v
    return out


def projective_points(prime: int) -> np.ndarray:
    """Canonical representatives of P^3(F_p): first nonzero coordinate equal to 1."""
    blocks = []
    for lead in range(NVARS):
        tail = NVARS - lead - 1
        rest = np.array(list(product(range(prime), repeat=tail)), dtype=np.int64).reshape(prime**tail, tail)
        block = np.zeros((len(rest), NVARS), dtype=np.int64)
        block[:, lead] = 1
        block[:, lead + 1 :] = rest
        blocks.append(block)
    return np.concatenate(blocks)


def evaluate_mod_p(poly: dict, points: np.ndarray, prime: int) -> np.ndarray:
    out = np.zeros(len(points), dtype=np.int64)
    for mono, c in poly.items():
        term = np.full(len(points), c, dtype=np.int64)
        for k, e in enumerate(mono):
            if e:
                term = term * pow_mod(points[:, k], e, prime) % prime
        out = (out + term) % prime
    return out


def pow_mod(x: np.ndarray, e: int, prime: int) -> np.ndarray:
    result = np.ones_like(x)
    base = x % prime
    while e:
        if e & 1:
            result = result * base % prime
        base = base * base % prime
        e >>= 1
    return result


def diagonal_gradient(grad: list[dict]) -> bool:
    for k, g in enumerate(grad):
        if len(g) != 1:
            return False
        (mono,) = g
        if any(e for j, e in enumerate(mono) if j != k) or mono[k] == 0:
            return False
    return True


def smoothness_certificate(f: Poly, prime: int) -> SmoothnessCertificate:
    """Scan P^3(F_p) for common zeros of f and its gradient.

    Raises SingularPointFound with the first witness (the caller should try
    another prime) and BadPrime when the coefficients cannot be reduced.
    """
    if not is_odd_prime(prime):
        raise BadPrime(f"{prime} is not an odd prime")
    if f.is_zero() or not f.is_homogeneous() or f.degree < 2:
        raise ValueError("need a nonzero homogeneous form of degree >= 2 in x, y, z, t")
    red_f = reduce_poly(f, prime)
    red_grad = [reduce_poly(g, prime) for g in gradient(f)]
    pts = projective_points(prime)
    singular = evaluate_mod_p(red_f, pts, prime) == 0
    for g in red_grad:
        singular &= evaluate_mod_p(g, pts, prime) == 0
    hits = np.flatnonzero(singular)
    if len(hits):
        raise SingularPointFound(prime, tuple(int(v) for v in pts[hits[0]]))
    return SmoothnessCertificate(
        prime=prime,
        points_scanned=len(pts),
        geometric=diagonal_gradient(red_grad),
        reduced_f=red_f,
    )


def find_smooth_prime(f: Poly, primes=(5, 7, 11, 13, 17, 19, 23)):
    """First prime giving a complete certificate, plus a log of every attempt."""
    attempts = []
    for p in primes:
        try:
            cert = smoothness_certificate(f, p)
        except SingularPointFound as exc:
            attempts.append({"prime": p, "outcome": "singular", "witness": list(exc.witness)})
            continue
        except BadPrime as exc:
            attempts.append({"prime": p, "outcome": "bad-prime", "witness": str(exc)})
            continue
        if cert.complete:
            attempts.append({"prime": p, "outcome": "pass", "points": cert.points_scanned})
            return cert, attempts
        attempts.append({"prime": p, "outcome": "rational-scan-empty", "points": cert.points_scanned})
    return None, attempts
