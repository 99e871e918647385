"""Gap-set representation of C-semigroups.

A C-semigroup is determined by its cone C, a total order used for min/max
style invariants, and its finite gap set H = C \\ S.  The class below stores
exactly that and derives everything else on demand.  Construction always
verifies closure: for every gap h and every splitting h = a + b into nonzero
cone points, at least one part must again be a gap, otherwise two elements
of S would sum into H.

All returned point collections are tuples sorted by the semigroup's order,
so results are deterministic and safe to freeze in tests.
"""
from __future__ import annotations

import itertools

from .errors import ClosureViolation, InputError, NotPresent
from .geometry import Cone, Point, vadd, vsub
from .orders import MonomialOrder, ascending_points, grlex, validate


class GapSemigroup:
    """S = C \\ gaps, with gaps a finite subset of C \\ {0}."""

    def __init__(self, cone: Cone, order: MonomialOrder, gaps):
        validate(order, cone)
        gap_set = frozenset(tuple(int(c) for c in g) for g in gaps)
        zero = tuple(0 for _ in range(cone.dim))
        for g in gap_set:
            if len(g) != cone.dim:
                raise InputError(f"gap {g} has wrong dimension")
            if g == zero:
                raise InputError("the zero vector cannot be a gap")
            if g not in cone:
                raise InputError(f"gap {g} lies outside the cone")
        self.cone = cone
        self.order = order
        self.gaps = gap_set
        self.zero = zero
        self._check_closure()
        self._sorted_gaps: tuple[Point, ...] | None = None
        self._msg: tuple[Point, ...] | None = None
        self._small: tuple[Point, ...] | None = None
        self._mult: Point | None = None
        self._pf: tuple[Point, ...] | None = None

    @classmethod
    def from_gaps(cls, cone: Cone, order: MonomialOrder, gaps) -> "GapSemigroup":
        return cls(cone, order, gaps)

    @classmethod
    def numerical(cls, gaps, order: MonomialOrder | None = None) -> "GapSemigroup":
        """Numerical semigroup from integer gaps; points become 1-tuples."""
        pts = [(int(g),) if not isinstance(g, tuple) else g for g in gaps]
        return cls(Cone.line(), order or grlex(1), pts)

    def _check_closure(self):
        for h in self.order.sorted(self.gaps):
            for a in itertools.product(*(range(c + 1) for c in h)):
                if a == self.zero or a == h or a in self.gaps:
                    continue
                b = vsub(h, a)
                if b in self.gaps:
                    continue
                if a in self.cone and b in self.cone:
                    raise ClosureViolation(
                        f"{a} + {b} = {h} escapes into the gap set", witness=(a, b)
                    )

    # -- membership and basic invariants -------------------------------------

    def contains(self, x: Point) -> bool:
        return x in self.cone and x not in self.gaps

    def __contains__(self, x: Point) -> bool:
        return self.contains(x)

    def gaps_sorted(self) -> tuple[Point, ...]:
        if self._sorted_gaps is None:
            self._sorted_gaps = tuple(self.order.sorted(self.gaps))
        return self._sorted_gaps

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def frobenius(self) -> Point | None:
        """Largest gap in the order, or None when there are no gaps."""
        if not self.gaps:
            return None
        return self.gaps_sorted()[-1]

    def elements_ascending(self):
        """Infinite generator over S in increasing order, starting at 0."""
        for x in ascending_points(self.cone, self.order):
            if x not in self.gaps:
                yield x

    def multiplicity(self) -> Point:
        """Least nonzero element."""
        if self._mult is None:
            gen = self.elements_ascending()
            next(gen)
            self._mult = next(gen)
        return self._mult

    def small_elements(self) -> tuple[Point, ...]:
        """Elements strictly below the largest gap, including 0.

        Without gaps this degenerates to (0,); every structural question
        about such a semigroup is a question about the cone itself.
        """
        if self._small is None:
            fb = self.frobenius()
            if fb is None:
                self._small = (self.zero,)
            else:
                key = self.order.key(fb)
                out = []
                for x in self.elements_ascending():
                    if self.order.key(x) >= key:
                        break
                    out.append(x)
                self._small = tuple(out)
        return self._small

    # -- generators -----------------------------------------------------------

    def msg(self) -> tuple[Point, ...]:
        """Minimal generating set: the irreducible elements of S \\ {0}.

        Every element whose first-functional level exceeds
        2*max(level of a gap) + max(level of a Hilbert basis element)
        splits into two nonzero elements of S: peel Hilbert basis summands
        until the partial sum clears the gap levels, and the remainder still
        clears them too.  Irreducibility below that bound is a direct scan
        over componentwise splittings.
        """
        if self._msg is not None:
            return self._msg
        pi1 = self.order.pi1
        gap_top = max((pi1(g) for g in self.gaps), default=0)
        basis_top = max(pi1(b) for b in self.cone.hilbert_basis())
        bound = 2 * gap_top + basis_top
        coeffs = self.order.functionals[0]
        candidates = []
        for level in range(1, bound + 1):
            for x in self.cone.points_with_value(coeffs, level):
                if x not in self.gaps:
                    candidates.append(x)
        members = set(candidates)
        out = [x for x in candidates if not self._splits(x, members)]
        self._msg = tuple(self.order.sorted(out))
        return self._msg

    def _splits(self, x: Point, members: set[Point]) -> bool:
        for a in itertools.product(*(range(c + 1) for c in x)):
            if a == self.zero or a == x:
                continue
            if a in members and vsub(x, a) in members:
                return True
        return False

    def embedding_dim(self) -> int:
        return len(self.msg())

    def ratio(self) -> Point:
        """Least element outside the monoid generated by the multiplicity.

        Equals the least minimal generator other than the multiplicity; if
        the multiplicity generates everything there is no ratio.
        """
        m = self.multiplicity()
        rest = [x for x in self.msg() if x != m]
        if not rest:
            raise NotPresent("semigroup is generated by its multiplicity; no ratio")
        return rest[0]

    # -- apery, pseudo-frobenius, special gaps --------------------------------

    def apery(self, b: Point) -> tuple[Point, ...]:
        """Apery set of a nonzero element b.

        Dimension 1 uses the classical set: the least element of S in each
        residue class mod b, exactly b of them.  In higher dimension that
        reading is infinite (whole boundary strips never contain b), so we
        return the finite core {0} plus the elements a of S with a - b a gap.
        """
        b = tuple(int(c) for c in b)
        if not self.contains(b) or b == self.zero:
            raise InputError(f"{b} is not a nonzero element of the semigroup")
        if self.cone.dim == 1:
            n = b[0]
            out = []
            for residue in range(n):
                s = residue
                while not self.contains((s,)):
                    s += n
                out.append((s,))
            return tuple(self.order.sorted(out))
        out = {self.zero}
        for g in self.gaps:
            a = vadd(g, b)
            if a not in self.gaps:
                out.add(a)
        return tuple(self.order.sorted(out))

    def pseudo_frobenius(self) -> tuple[Point, ...]:
        """Gaps g with g + s in S for every nonzero s; generator check suffices."""
        if self._pf is None:
            gens = self.msg()
            out = [
                g
                for g in self.gaps_sorted()
                if all(vadd(g, m) not in self.gaps for m in gens)
            ]
            self._pf = tuple(out)
        return self._pf

    def special_gaps(self) -> tuple[Point, ...]:
        """Pseudo-frobenius gaps g with 2g in S: exactly the adjoinable gaps."""
        return tuple(
            g for g in self.pseudo_frobenius() if vadd(g, g) not in self.gaps
        )

    # -- local moves ----------------------------------------------------------

    def adjoin(self, x: Point) -> "GapSemigroup":
        """S together with one special gap; validated, still a semigroup."""
        x = tuple(int(c) for c in x)
        if x not in self.special_gaps():
            raise InputError(f"{x} is not a special gap; adjoining would break closure")
        return GapSemigroup(self.cone, self.order, self.gaps - {x})

    def remove_multiplicity(self) -> "GapSemigroup":
        return GapSemigroup(self.cone, self.order, self.gaps | {self.multiplicity()})

    def remove_ratio(self) -> "GapSemigroup":
        return GapSemigroup(self.cone, self.order, self.gaps | {self.ratio()})

    # -- value semantics --------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, GapSemigroup)
            and self.cone == other.cone
            and self.order == other.order
            and self.gaps == other.gaps
        )

    def __hash__(self):
        return hash((self.cone, self.order, self.gaps))

    def __repr__(self):
        shown = [self._fmt(g) for g in self.gaps_sorted()[:6]]
        if self.genus > 6:
            shown.append("...")
        return f"GapSemigroup(dim={self.cone.dim}, genus={self.genus}, gaps=[{', '.join(shown)}])"

    def _fmt(self, x: Point) -> str:
        return str(x[0]) if self.cone.dim == 1 else str(x)
