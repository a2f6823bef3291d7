"""Lines in P^3 over K, stored as the RREF of a spanning 2x4 matrix."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations

from .exactfield import I, ONE, SQRT3, SQRT5, ZERO, FieldElement, fe
from .linalg import kernel, rref
from .polyalg import Poly, restrict_to_line


class DependentForms(ValueError):
    pass


class PointP3:
    """Projective point, scaled so that the first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = [fe(c) for c in coords]
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = lead.inverse()
        self.coords = tuple(c * inv for c in coords)

    def __eq__(self, other):
        return isinstance(other, PointP3) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "PointP3(" + " : ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [c.to_json() for c in self.coords]


# column pairs of a 2x4 matrix, with the sign of the permutation (S, complement S)
_PAIRS = list(combinations(range(4), 2))


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


_LAPLACE = []
for _s in _PAIRS:
    _c = tuple(k for k in range(4) if k not in _s)
    _LAPLACE.append((_PAIRS.index(_s), _PAIRS.index(_c), _perm_sign(_s + _c)))


class Line:
    """Line of P^3 given by two spanning vectors of its 2-plane in K^4.

    The stored ``span`` is the reduced row echelon form, unique per line, so
    equality and hashing compare it directly.
    """

    __slots__ = ("span", "_hash", "__dict__")

    def __init__(self, rows):
        red, pivots = rref(rows)
        if len(pivots) != 2:
            raise ValueError(f"span has rank {len(pivots)}, expected 2")
        self.span = tuple(tuple(r) for r in red)
        self._hash = hash(self.span)

    def __eq__(self, other):
        return isinstance(other, Line) and self.span == other.span

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Line(" + "; ".join("(" + ", ".join(str(v) for v in r) + ")" for r in self.span) + ")"

    @cached_property
    def minors(self) -> tuple:
        """The six 2x2 minors of the span, columns ordered lexicographically."""
        r0, r1 = self.span
        return tuple(r0[i] * r1[j] - r0[j] * r1[i] for i, j in _PAIRS)

    def sort_key(self):
        return tuple(v.sort_key() for row in self.span for v in row)

    def contains_point(self, point) -> bool:
        pt = point.coords if isinstance(point, PointP3) else [fe(c) for c in point]
        return len(rref([*self.span, pt])[1]) == 2

    def to_json(self) -> dict:
        return {"span": [[v.to_json() for v in row] for row in self.span]}

    @classmethod
    def from_json(cls, data) -> Line:
        return cls([[FieldElement.from_json(v) for v in row] for row in data["span"]])


def line_from_forms(form1, form2) -> Line:
    """The line cut out by two linear forms, given as coefficient 4-tuples."""
    forms = [[fe(c) for c in form1], [fe(c) for c in form2]]
    if len(rref(forms)[1]) != 2:
        raise DependentForms("linear forms are proportional")
    return Line(kernel(forms, 4))


def coordinate_line(i: int, j: int) -> Line:
    rows = [[ONE if k == i else ZERO for k in range(4)], [ONE if k == j else ZERO for k in range(4)]]
    return Line(rows)


def line_160() -> Line:
    c = (I + 1) * (SQRT3 + 1)
    return line_from_forms((2, c, 0, 0), (0, 0, 2, c))


def line_192() -> Line:
    c = SQRT5 + 1
    return line_from_forms(((I + 1) * c, -2, -2, 0), (0, 2, -2, (I - 1) * c))


def act(g, line: Line) -> Line:
    return Line([g.apply(r) for r in line.span])


def stacked_det(l1: Line, l2: Line) -> FieldElement:
    """Determinant of the 4x4 matrix whose rows are both spans.

    Laplace expansion along the first two rows, so each line contributes
    its (cached) 2x2 minors.
    """
    m1, m2 = l1.minors, l2.minors
    total = ZERO
    for s, c, sign in _LAPLACE:
        if m1[s] and m2[c]:
            term = m1[s] * m2[c]
            total = total + term if sign > 0 else total - term
    return total


def lines_disjoint(l1: Line, l2: Line) -> bool:
    return bool(stacked_det(l1, l2))


def intersection_point(l1: Line, l2: Line) -> PointP3 | None:
    """A common point of two distinct meeting lines, else None."""
    if lines_disjoint(l1, l2):
        return None
    rows = [*l1.span, *l2.span]
    # c0*r0 + c1*r1 = -(c2*r2 + c3*r3) for (c0..c3) in the left kernel
    cols = [[rows[r][k] for r in range(4)] for k in range(4)]
    for c in kernel(cols, 4):
        vec = [c[0] * a + c[1] * b for a, b in zip(rows[0], rows[1])]
        if any(vec):
            return PointP3(vec)
    return None


def line_on_surface(line: Line, f: Poly) -> bool:
    return not any(restrict_to_line(f, line.span[0], line.span[1]))
