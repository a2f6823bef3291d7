"""Sparse polynomials in x, y, z, t over K."""

from __future__ import annotations

from itertools import permutations

from .exactfield import ONE, ZERO, FieldElement, fe

NVARS = 4
VARS = "xyzt"

Monomial = tuple  # (e_x, e_y, e_z, e_t)


class DegenerateSpan(ValueError):
    pass


def _rows(m):
    return m.rows if hasattr(m, "rows") else m


class Poly:
    """Polynomial as a mapping from exponent tuples to nonzero coefficients.

    ``degree`` is None for the zero polynomial.
    """

    __slots__ = ("_terms", "degree")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = fe(c)
            if c:
                mono = tuple(mono)
                if len(mono) != NVARS or min(mono) < 0:
                    raise ValueError(f"bad monomial {mono!r}")
                clean[mono] = c
        self._terms = clean
        self.degree = max((sum(m) for m in clean), default=None)

    @classmethod
    def _trusted(cls, terms: dict) -> Poly:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.degree = max((sum(m) for m in terms), default=None)
        return obj

    @classmethod
    def var(cls, index: int) -> Poly:
        mono = [0] * NVARS
        mono[index] = 1
        return cls._trusted({tuple(mono): ONE})

    @classmethod
    def constant(cls, c) -> Poly:
        return cls({(0,) * NVARS: c})

    @classmethod
    def linear_form(cls, coeffs) -> Poly:
        return cls({tuple(int(i == j) for j in range(NVARS)): c for i, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def coefficient(self, mono) -> FieldElement:
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._trusted({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = fe(other)
            if not c:
                return Poly()
            return Poly._trusted({m: v * c for m, v in self._terms.items()})
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return Poly._trusted({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, point) -> FieldElement:
        point = [fe(v) for v in point]
        powers = [[ONE] for _ in range(NVARS)]
        total = ZERO
        for m, c in self._terms.items():
            term = c
            for k, e in enumerate(m):
                pk = powers[k]
                while len(pk) <= e:
                    pk.append(pk[-1] * point[k])
                term = term * pk[e]
            total = total + term
        return total

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m in sorted(self._terms, reverse=True):
            mono = "".join(VARS[k] + (f"^{e}" if e > 1 else "") for k, e in enumerate(m) if e)
            c = self._terms[m]
            if not mono:
                out.append(f"({c})")
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"({c})*{mono}")
        return " + ".join(out)


def sigma4(m: Monomial) -> Poly:
    """Sum of the distinct monomials in the S4-orbit of ``m``, each with coefficient 1."""
    return Poly({perm: ONE for perm in set(permutations(tuple(m)))})


def build_maschke_f(c44=14, c2222=168) -> Poly:
    """The degree-8 invariant of G31; the coefficients are exposed for perturbation tests."""
    return sigma4((8, 0, 0, 0)) + sigma4((4, 4, 0, 0)) * c44 + sigma4((2, 2, 2, 2)) * c2222


def compose_linear(p: Poly, m) -> Poly:
    """Return q with q(v) = p(M v): each variable becomes the matching row of M."""
    rows = _rows(m)
    forms = [Poly.linear_form(rows[i]) for i in range(NVARS)]
    cache = [{0: Poly.constant(1), 1: forms[i]} for i in range(NVARS)]

    def power(i, e):
        c = cache[i]
        if e not in c:
            c[e] = power(i, e - 1) * forms[i]
        return c[e]

    out = Poly()
    for mono, coeff in p:
        term = Poly.constant(coeff)
        for i, e in enumerate(mono):
            if e:
                term = term * power(i, e)
        out = out + term
    return out


def partial_derivative(p: Poly, var: int) -> Poly:
    out = {}
    for m, c in p:
        e = m[var]
        if e:
            dm = list(m)
            dm[var] = e - 1
            out[tuple(dm)] = c * e
    return Poly._trusted(out)


def gradient(p: Poly) -> list[Poly]:
    return [partial_derivative(p, k) for k in range(NVARS)]


def _binary_mul(u: list, v: list) -> list:
    out = [ZERO] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def restrict_to_line(p: Poly, point_a, point_b, degree: int | None = None) -> tuple:
    """Coefficients of p(s*A + t*B); entry k multiplies s^k t^(d-k).

    ``d`` is the degree of p (or ``degree`` when given, which also fixes the
    length for the zero polynomial; default 8).
    """
    a = [fe(v) for v in point_a]
    b = [fe(v) for v in point_b]
    if all(not (a[i] * b[j] - a[j] * b[i]) for i in range(NVARS) for j in range(i + 1, NVARS)):
        raise DegenerateSpan("points are proportional")
    if degree is None:
        degree = 8 if p.degree is None else p.degree
    if not p.is_homogeneous() or (p.degree is not None and p.degree != degree):
        raise ValueError("restriction needs a homogeneous polynomial of the given degree")
    # variable k restricted to the line, as [t-coefficient, s-coefficient]
    lin = [[b[k], a[k]] for k in range(NVARS)]
    powers = [[[ONE], lin[k]] for k in range(NVARS)]
    coeffs = [ZERO] * (degree + 1)
    for mono, c in p:
        form = [c]
        for k, e in enumerate(mono):
            pk = powers[k]
            while len(pk) <= e:
                pk.append(_binary_mul(pk[-1], lin[k]))
            if e:
                form = _binary_mul(form, pk[e])
        for k, v in enumerate(form):
            coeffs[k] = coeffs[k] + v
    return tuple(coeffs)
