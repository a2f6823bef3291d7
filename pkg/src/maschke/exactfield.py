"""Exact arithmetic in K = Q(i, sqrt3, sqrt5) and in prime fields F_p.

An element of K is stored as eight integer numerators over one positive
common denominator, coordinates taken against the basis

    (1, i, sqrt3, i*sqrt3, sqrt5, i*sqrt5, sqrt15, i*sqrt15).

Basis index ``k`` encodes a product of generators in its bits: bit 0 is i,
bit 1 is sqrt3, bit 2 is sqrt5.  Hence ``e_a * e_b = c(a, b) * e_{a ^ b}``
with an integer ``c(a, b)``, which is all the structure-constant table needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

Rational = Fraction

DEGREE = 8
BASIS_NAMES = ("1", "i", "√3", "i√3", "√5", "i√5", "√15", "i√15")

# squares of the three generators, in bit order
_GEN_SQUARES = (-1, 3, 5)


def _structure_constant(a: int, b: int) -> int:
    c = 1
    for bit, sq in enumerate(_GEN_SQUARES):
        if (a >> bit) & 1 and (b >> bit) & 1:
            c *= sq
    return c


STRUCTURE = tuple(tuple(_structure_constant(a, b) for b in range(DEGREE)) for a in range(DEGREE))


class NonRational(ValueError):
    """An irrational coordinate was found where a rational number was required."""


class BadPrime(ValueError):
    """The modulus is not an odd prime, or it divides a denominator."""


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    return all(p % q for q in range(3, math.isqrt(p) + 1, 2))


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class FieldElement:
    """Immutable element of K with a canonical (numerators, denominator) form.

    Canonical means ``gcd(num_0, ..., num_7, den) == 1`` and ``den > 0``, which
    is equivalent to every coordinate being a reduced fraction, so equality
    and hashing can look at the stored integers directly.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, coords=(0,) * DEGREE):
        coords = tuple(coords)
        if len(coords) != DEGREE:
            raise ValueError(f"expected {DEGREE} coordinates, got {len(coords)}")
        fracs = [_as_fraction(c) for c in coords]
        den = reduce(lambda u, v: u * v // math.gcd(u, v), (f.denominator for f in fracs), 1)
        nums = tuple(f.numerator * (den // f.denominator) for f in fracs)
        self._set(nums, den)

    def _set(self, nums, den):
        g = math.gcd(*nums, den)
        if den < 0:
            g = -g
        if g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        self._num = nums
        self._den = den

    @classmethod
    def _raw(cls, nums, den) -> FieldElement:
        obj = cls.__new__(cls)
        obj._set(tuple(nums), den)
        return obj

    @classmethod
    def from_parts(cls, nums, den: int = 1) -> FieldElement:
        """Build from integer numerators over a common nonzero denominator."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        nums = tuple(int(n) for n in nums)
        if len(nums) != DEGREE:
            raise ValueError(f"expected {DEGREE} numerators")
        return cls._raw(nums, int(den))

    @classmethod
    def rational(cls, q) -> FieldElement:
        q = _as_fraction(q)
        return cls._raw((q.numerator,) + (0,) * (DEGREE - 1), q.denominator)

    @classmethod
    def coerce(cls, x) -> FieldElement:
        if isinstance(x, FieldElement):
            return x
        return cls.rational(x)

    # -- accessors ---------------------------------------------------------

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = FieldElement.rational(other)
        da, db = self._den, other._den
        if da == db:
            return FieldElement._raw([x + y for x, y in zip(self._num, other._num)], da)
        return FieldElement._raw([x * db + y * da for x, y in zip(self._num, other._num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw([-x for x in self._num], self._den)

    def __sub__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        return self + (-FieldElement.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return FieldElement.rational(other) - self

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            q = _as_fraction(other)
            return FieldElement._raw([x * q.numerator for x in self._num], self._den * q.denominator)
        an, bn = self._num, other._num
        out = [0] * DEGREE
        bnz = [(j, y) for j, y in enumerate(bn) if y]
        for i, x in enumerate(an):
            if not x:
                continue
            row = STRUCTURE[i]
            for j, y in bnz:
                out[i ^ j] += row[j] * x * y
        return FieldElement._raw(out, self._den * other._den)

    __rmul__ = __mul__

    def conjugate(self, bit: int) -> FieldElement:
        """Galois automorphism negating generator ``bit`` (0: i, 1: sqrt3, 2: sqrt5)."""
        mask = 1 << bit
        return FieldElement._raw([-x if k & mask else x for k, x in enumerate(self._num)], self._den)

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        # peel off one generator at a time: a*s(a) is fixed by s
        b1 = self.conjugate(0)
        n1 = self * b1
        b2 = n1.conjugate(1)
        n2 = n1 * b2
        b3 = n2.conjugate(2)
        norm = n2 * b3
        assert norm.is_rational()
        q = Fraction(norm._num[0], norm._den)
        return (b1 * b2 * b3) * (1 / q)

    def __truediv__(self, other):
        if not isinstance(other, (FieldElement, int, Fraction)):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in K")
            return self * (1 / _as_fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return FieldElement.rational(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self._den == other._den and self._num == other._num
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return self.is_rational() and Fraction(self._num[0], self._den) == q
        return NotImplemented

    def __hash__(self):
        return hash((self._num, self._den))

    def sort_key(self):
        """Total order on canonical forms, used for deterministic output."""
        return self.coords

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        parts = []
        for q, name in zip(self.coords, BASIS_NAMES):
            if not q:
                continue
            if name == "1":
                parts.append(str(q))
            elif q == 1:
                parts.append(name)
            elif q == -1:
                parts.append("-" + name)
            else:
                parts.append(f"{q}*{name}" if q.denominator == 1 else f"({q})*{name}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[str]:
        return [f"{q.numerator}/{q.denominator}" for q in self.coords]

    @classmethod
    def from_json(cls, data) -> FieldElement:
        return cls(Fraction(s) for s in data)


ZERO = FieldElement()
ONE = FieldElement.rational(1)
I = FieldElement.from_parts((0, 1, 0, 0, 0, 0, 0, 0))
SQRT3 = FieldElement.from_parts((0, 0, 1, 0, 0, 0, 0, 0))
SQRT5 = FieldElement.from_parts((0, 0, 0, 0, 1, 0, 0, 0))
SQRT15 = FieldElement.from_parts((0, 0, 0, 0, 0, 0, 1, 0))


def fe(x) -> FieldElement:
    """Shorthand coercion of ints, Fractions, "p/q" strings and FieldElements."""
    return FieldElement.coerce(x)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


class FpElement:
    """Residue class modulo an odd prime."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if not is_odd_prime(modulus):
            raise BadPrime(f"{modulus} is not an odd prime")
        self.value = value % modulus
        self.modulus = modulus

    def _check(self, other):
        if isinstance(other, int):
            return FpElement(other, self.modulus)
        if not isinstance(other, FpElement) or other.modulus != self.modulus:
            raise ValueError("mismatched moduli")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FpElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __neg__(self):
        return FpElement(-self.value, self.modulus)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        return FpElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> FpElement:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return FpElement(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, {self.modulus})"


def fe_reduce_mod_p(a: FieldElement, p: int) -> FpElement:
    if not is_odd_prime(p):
        raise BadPrime(f"{p} is not an odd prime")
    if not a.is_rational():
        raise NonRational(f"{a} has irrational coordinates")
    if a.denominator % p == 0:
        raise BadPrime(f"{p} divides the denominator of {a}")
    return FpElement(a.numerators[0] * pow(a.denominator, -1, p), p)
