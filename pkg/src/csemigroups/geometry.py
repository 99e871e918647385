"""Exact integer-cone geometry.

A cone here is the set of lattice points C = N^p inside the rational cone
spanned by a finite list of integer ray vectors.  Rays are normalised to
primitive vectors (gcd of coordinates 1) and reduced to the extremal ones at
construction time, so two generator lists spanning the same cone compare
equal.  All membership tests and enumerations are exact integer arithmetic;
no floating point appears anywhere in this package.

Points are plain tuples of non-negative ints, which keeps every value
hashable and immutable for free.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

Point = tuple[int, ...]


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class UnsupportedDimension(NotImplementedError):
    pass


def vadd(a: Point, b: Point) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Point, b: Point) -> Point:
    """Componentwise difference; may leave N^p, callers must check."""
    return tuple(x - y for x, y in zip(a, b))


def scale(a: Point, k: int) -> Point:
    return tuple(k * x for x in a)


def deg(a: Point) -> int:
    return sum(a)


def is_nonnegative(a: Point) -> bool:
    return all(x >= 0 for x in a)


def unit_vectors(dim: int) -> tuple[Point, ...]:
    """Canonical basis e_1 .. e_p."""
    return tuple(tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim))


def is_unit_vector(a: Point) -> bool:
    return sum(a) == 1 and all(x in (0, 1) for x in a)


def primitive(a: Point) -> Point:
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        raise GeometryError("zero vector has no primitive representative")
    return tuple(x // g for x in a)


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


class Cone:
    """C = N^p intersected with the rational cone spanned by the given rays.

    The generator list may contain redundant (non-extremal) or non-primitive
    vectors; the constructor normalises.  Supported dimensions are 1..3; the
    cone must be full-dimensional in the sense of having at least p extremal
    rays (dimension 1 always uses the single ray (1,)).
    """

    __slots__ = ("dim", "rays", "_facets", "_hilbert")

    def __init__(self, rays, dim: int | None = None):
        rays = [tuple(int(x) for x in r) for r in rays]
        if not rays:
            if dim == 1:
                rays = [(1,)]
            else:
                raise GeometryError("a cone needs at least one ray")
        p = len(rays[0])
        if dim is not None and dim != p:
            raise DimensionMismatch(f"rays have dimension {p}, expected {dim}")
        if any(len(r) != p for r in rays):
            raise DimensionMismatch("rays of mixed dimension")
        if p < 1 or p > 3:
            raise UnsupportedDimension(f"dimension {p} not supported")
        for r in rays:
            if not is_nonnegative(r):
                raise GeometryError(f"ray {r} leaves the non-negative orthant")
        prim = []
        for r in rays:
            q = primitive(r)
            if q not in prim:
                prim.append(q)
        self.dim = p
        self.rays = self._extremal(prim)
        self._facets = None
        self._hilbert = None
        if p == 2 and len(self.rays) < 2:
            raise GeometryError("a two-dimensional cone needs two extremal rays")
        if p == 3 and len(self.rays) < 3:
            raise GeometryError("a three-dimensional cone needs three extremal rays")

    @classmethod
    def line(cls) -> "Cone":
        return cls([(1,)])

    @classmethod
    def orthant(cls, dim: int) -> "Cone":
        return cls(list(unit_vectors(dim)))

    def _extremal(self, rays: list[Point]) -> tuple[Point, ...]:
        if self.dim == 1:
            return ((1,),)
        if self.dim == 2:
            # extremal rays are the two of extreme slope; compare by cross sign
            lo = hi = rays[0]
            for r in rays[1:]:
                if _cross(r, lo) > 0:
                    lo = r
                if _cross(hi, r) > 0:
                    hi = r
            return (lo,) if lo == hi else (lo, hi)
        kept = list(rays)
        changed = True
        while changed and len(kept) > 3:
            changed = False
            for r in kept:
                others = [s for s in kept if s != r]
                if _in_span(others, r):
                    kept.remove(r)
                    changed = True
                    break
        return tuple(sorted(kept))

    # -- membership ---------------------------------------------------------

    def facet_normals(self) -> tuple[Point, ...]:
        """Integer inward normals; x is in the rational cone iff n . x >= 0 for all."""
        if self._facets is None:
            self._facets = _facets_of(self.dim, self.rays)
        return self._facets

    def contains(self, x: Point) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point {x} has wrong dimension")
        if not is_nonnegative(x):
            return False
        return all(_dot(n, x) >= 0 for n in self.facet_normals())

    def __contains__(self, x: Point) -> bool:
        return self.contains(x)

    # -- enumeration --------------------------------------------------------

    def points_with_value(self, functional: tuple[int, ...], value: int) -> list[Point]:
        """Cone points on one level set of a functional positive on all rays.

        Positivity on the rays makes each level set finite even when some
        coefficient is zero or negative: writing x as a non-negative rational
        combination of the rays bounds every coordinate by
        value * sum_i rays[i][j] / functional(rays[i]).
        """
        if len(functional) != self.dim:
            raise DimensionMismatch("functional has wrong dimension")
        ray_values = [_dot(functional, r) for r in self.rays]
        if any(v <= 0 for v in ray_values):
            raise GeometryError(f"functional {functional} is not positive on every ray")
        if value < 0:
            return []
        zero = tuple(0 for _ in range(self.dim))
        if value == 0:
            return [zero]
        bounds = [
            int(value * sum(Fraction(r[j], rv) for r, rv in zip(self.rays, ray_values)))
            for j in range(self.dim)
        ]
        out: list[Point] = []

        def rec(j: int, prefix: list[int], remaining: int):
            if j == self.dim:
                if remaining == 0:
                    x = tuple(prefix)
                    if self.contains(x):
                        out.append(x)
                return
            c = functional[j]
            if c > 0:
                if remaining < 0:
                    return
                top = min(bounds[j], remaining // c)
            else:
                top = bounds[j]
            for xj in range(top + 1):
                prefix.append(xj)
                rec(j + 1, prefix, remaining - c * xj)
                prefix.pop()

        rec(0, [], value)
        return sorted(out)

    def primitive_ray_elements(self) -> tuple[Point, ...]:
        return self.rays

    def hilbert_basis(self) -> tuple[Point, ...]:
        """Unique minimal generating set of the monoid C.

        Any element decomposes over the extremal rays with some coefficient
        at least 1 once its coordinate sum exceeds the sum of the ray degrees,
        so the sieve region {x in C : deg(x) <= sum deg(ray)} is exhaustive.
        A closure pass re-derives every sieved point from the basis as a
        defensive check.
        """
        if self._hilbert is not None:
            return self._hilbert
        if self.dim == 1:
            self._hilbert = ((1,),)
            return self._hilbert
        bound = sum(deg(r) for r in self.rays)
        ones = tuple(1 for _ in range(self.dim))
        region = []
        for v in range(1, bound + 1):
            region.extend(self.points_with_value(ones, v))
        region_set = set(region)
        basis = [x for x in region if not self._decomposes(x, region_set)]
        reachable = {tuple(0 for _ in range(self.dim))}
        frontier = [tuple(0 for _ in range(self.dim))]
        while frontier:
            y = frontier.pop()
            for b in basis:
                z = vadd(y, b)
                if deg(z) <= bound and z not in reachable:
                    reachable.add(z)
                    frontier.append(z)
        missing = region_set - reachable
        if missing:
            raise GeometryError(f"hilbert basis closure check failed at {sorted(missing)}")
        self._hilbert = tuple(sorted(basis))
        return self._hilbert

    def _decomposes(self, x: Point, members: set[Point]) -> bool:
        for a in _box_points(x):
            if a == x or deg(a) == 0:
                continue
            if a in members and vsub(x, a) in members:
                return True
        return False

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Cone) and self.dim == other.dim and set(self.rays) == set(other.rays)

    def __hash__(self):
        return hash((self.dim, frozenset(self.rays)))

    def __repr__(self):
        return f"Cone({list(self.rays)!r})"


def _dot(a: Point, b: Point) -> int:
    return sum(x * y for x, y in zip(a, b))


def _box_points(x: Point):
    return itertools.product(*(range(c + 1) for c in x))


def _facets_of(dim: int, rays: tuple[Point, ...]) -> tuple[Point, ...]:
    if dim == 1:
        return ((1,),)
    if dim == 2:
        lo, hi = (rays + rays)[:2]
        if len(rays) == 1:
            # degenerate single-ray cone: x parallel to the ray
            n1 = (-lo[1], lo[0])
            n2 = (lo[1], -lo[0])
            return (n1, n2)
        # inward normals: cross(lo, x) >= 0 and cross(x, hi) >= 0
        return ((-lo[1], lo[0]), (hi[1], -hi[0]))
    normals = []
    for r, s in itertools.combinations(rays, 2):
        n = (
            r[1] * s[2] - r[2] * s[1],
            r[2] * s[0] - r[0] * s[2],
            r[0] * s[1] - r[1] * s[0],
        )
        if n == (0, 0, 0):
            continue
        for cand in (n, tuple(-c for c in n)):
            if all(_dot(cand, t) >= 0 for t in rays) and cand not in normals:
                normals.append(cand)
    if not normals:
        raise GeometryError("could not derive facet normals; cone may not be pointed")
    return tuple(normals)


def _in_span(rays: list[Point], x: Point) -> bool:
    """x inside the rational cone of the given 3d rays (used for extremality)."""
    try:
        facets = _facets_of(3, tuple(rays))
    except GeometryError:
        return False
    return all(_dot(n, x) >= 0 for n in facets)
