"""Total orders on lattice points, given by integer matrix functionals.

An order is represented by a list of row functionals; points compare by the
tuple of dot products, lexicographically.  The matrix must be nonsingular so
that distinct points never tie.  For enumerating a cone in increasing order
we additionally need the first functional to be strictly positive on every
nonzero cone element, which makes each level set finite; `validate` checks
both conditions and `successor`/`enumerate_up_to` rely on them.
"""
from __future__ import annotations

from fractions import Fraction

from .geometry import Cone, DimensionMismatch, Point, _dot


class OrderError(ValueError):
    pass


class MonomialOrder:
    """Total order keyed by integer functionals (rows of a nonsingular matrix)."""

    __slots__ = ("dim", "functionals", "name")

    def __init__(self, functionals, name: str = "matrix"):
        rows = [tuple(int(c) for c in row) for row in functionals]
        if not rows:
            raise OrderError("an order needs at least one functional")
        p = len(rows[0])
        if any(len(r) != p for r in rows):
            raise OrderError("functionals of mixed dimension")
        if len(rows) != p:
            raise OrderError("need exactly as many functionals as coordinates")
        if _det(rows) == 0:
            raise OrderError("order matrix is singular; distinct points could tie")
        self.dim = p
        self.functionals = tuple(rows)
        self.name = name

    def key(self, x: Point) -> tuple[int, ...]:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point {x} has wrong dimension for this order")
        return tuple(_dot(f, x) for f in self.functionals)

    def pi1(self, x: Point) -> int:
        """First functional; the grading used for level-by-level enumeration."""
        return _dot(self.functionals[0], x)

    def less(self, a: Point, b: Point) -> bool:
        return self.key(a) < self.key(b)

    def leq(self, a: Point, b: Point) -> bool:
        return self.key(a) <= self.key(b)

    def min(self, points):
        return min(points, key=self.key)

    def max(self, points):
        return max(points, key=self.key)

    def sorted(self, points) -> list[Point]:
        return sorted(points, key=self.key)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.functionals == other.functionals

    def __hash__(self):
        return hash(self.functionals)

    def __repr__(self):
        return f"MonomialOrder({list(self.functionals)!r}, name={self.name!r})"


def grlex(dim: int) -> MonomialOrder:
    """Graded lexicographic: total degree first, ties by coordinates left to right."""
    rows = [tuple(1 for _ in range(dim))]
    for i in range(dim - 1):
        rows.append(tuple(1 if j == i else 0 for j in range(dim)))
    return MonomialOrder(rows, name="grlex")


def lex(dim: int) -> MonomialOrder:
    """Plain lexicographic.  Valid for comparisons, rejected for enumeration."""
    rows = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    return MonomialOrder(rows, name="lex")


def matrix_order(functionals) -> MonomialOrder:
    return MonomialOrder(functionals)


def from_right_matrix(matrix) -> MonomialOrder:
    """Order induced by right-multiplication x -> x @ M: functionals are M's columns."""
    rows = [tuple(int(c) for c in row) for row in matrix]
    cols = [tuple(row[j] for row in rows) for j in range(len(rows[0]))]
    return MonomialOrder(cols, name="right-matrix")


def validate(order: MonomialOrder, cone: Cone) -> None:
    """Require pi1 > 0 on all nonzero cone elements, so levels are finite.

    It suffices to check the extremal rays: every cone element is a
    non-negative rational combination of them and pi1 is linear.
    """
    if order.dim != cone.dim:
        raise DimensionMismatch("order and cone dimensions differ")
    for r in cone.rays:
        if order.pi1(r) <= 0:
            raise OrderError(
                f"first functional {order.functionals[0]} is not positive on ray {r}; "
                "cone enumeration under this order would not terminate"
            )


def enumerate_up_to(cone: Cone, order: MonomialOrder, stop: Point) -> list[Point]:
    """All cone points x with x <= stop in the order, ascending."""
    validate(order, cone)
    coeffs = order.functionals[0]
    top = order.pi1(stop)
    out = []
    stop_key = order.key(stop)
    for level in range(top + 1):
        layer = cone.points_with_value(coeffs, level)
        out.extend(x for x in layer if order.key(x) <= stop_key)
    out.sort(key=order.key)
    return out


def successor(cone: Cone, order: MonomialOrder, x: Point) -> Point:
    """Least cone point strictly greater than x.

    Some cone point exists within pi1(x) + min ray level, since adding the
    cheapest primitive ray element to x lands strictly above x.
    """
    validate(order, cone)
    coeffs = order.functionals[0]
    xkey = order.key(x)
    bound = order.pi1(x) + min(order.pi1(r) for r in cone.rays)
    best = None
    for level in range(order.pi1(x), bound + 1):
        for y in cone.points_with_value(coeffs, level):
            k = order.key(y)
            if k > xkey and (best is None or k < best[0]):
                best = (k, y)
        if best is not None and best[0][0] < level:
            break
    if best is None:
        raise OrderError(f"no successor of {x} found below level {bound}")
    return best[1]


def ascending_points(cone: Cone, order: MonomialOrder):
    """Infinite generator of all cone points in increasing order."""
    validate(order, cone)
    coeffs = order.functionals[0]
    level = 0
    while True:
        for x in sorted(cone.points_with_value(coeffs, level), key=order.key):
            yield x
        level += 1


def interval(cone: Cone, order: MonomialOrder, lo: Point, hi: Point) -> list[Point]:
    """Cone points x with lo <= x < hi, ascending."""
    lo_key, hi_key = order.key(lo), order.key(hi)
    return [x for x in enumerate_up_to(cone, order, hi)
            if lo_key <= order.key(x) < hi_key]


def _det(rows: list[tuple[int, ...]]) -> Fraction:
    n = len(rows)
    m = [[Fraction(c) for c in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det
