"""Membership predicates: A-semigroup (three criteria), MED, Arf, saturated.

The A-condition compares small elements against shifts by canonical basis
vectors of N^p: S fails if some s in S and unit e have both s and s+e among
the small elements.  Scanning s over the small elements is complete, since
s outside N(S) forces s+e above the Frobenius element as well (keys add).

Every predicate returns a Verdict carrying an optional witness, so callers
and the command line can report why a check failed.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import CapabilityError, InputError
from .geometry import Cone, Point, scale, unit_vectors, vadd
from .orders import MonomialOrder, enumerate_up_to
from .semigroup import GapSemigroup


@dataclass(frozen=True)
class Verdict:
    value: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.value


def is_A(S: GapSemigroup) -> Verdict:
    """No small elements differing by a canonical basis vector.

    The scan includes s = 0: a unit vector that is itself a small element
    already forms a consecutive pair with the zero element.
    """
    units = unit_vectors(S.cone.dim)
    small = S.small_elements()
    small_set = set(small)
    for s in small:
        for e in units:
            if vadd(s, e) in small_set:
                return Verdict(False, (s, e))
    return Verdict(True, None)


def upsilon_window(cone: Cone, order: MonomialOrder, f: Point, m: Point):
    """Tie-broken max-level unit, the threshold level, and the window.

    The window collects cone points strictly below f whose first-functional
    value exceeds pi1(f) - pi1(m) - pi1(ebar), where ebar is the order-least
    unit vector of maximal pi1.  The threshold may be negative, in which
    case the window degenerates to everything below f.
    """
    units = unit_vectors(cone.dim)
    top = max(order.pi1(e) for e in units)
    ebar = order.min([e for e in units if order.pi1(e) == top])
    threshold = order.pi1(f) - order.pi1(m) - top
    window = tuple(
        x
        for x in enumerate_up_to(cone, order, f)
        if x != f and order.pi1(x) > threshold
    )
    return ebar, threshold, window


def is_A_upsilon(S: GapSemigroup) -> Verdict:
    """Window form of the A-check, valid when Fb(S) is above twice m(S).

    Checks consecutive pairs inside the window only, plus the boundary rule:
    an element sitting exactly on the threshold level must not have any
    unit shift inside S.
    """
    f = S.frobenius()
    if f is None:
        raise CapabilityError("window criterion needs a nonempty gap set")
    m = S.multiplicity()
    if not S.order.less(scale(m, 2), f):
        raise CapabilityError(
            "window criterion requires the Frobenius element above twice the multiplicity"
        )
    units = unit_vectors(S.cone.dim)
    _, threshold, window = upsilon_window(S.cone, S.order, f, m)
    window_set = set(window)
    for x in window:
        if not S.contains(x):
            continue
        for e in units:
            y = vadd(x, e)
            if y in window_set and S.contains(y):
                return Verdict(False, (x, e))
    for y in S.cone.points_with_value(S.order.functionals[0], threshold):
        if not S.contains(y):
            continue
        for e in units:
            if S.contains(vadd(y, e)):
                return Verdict(False, (y, e))
    return Verdict(True, None)


def residue_A_check(S: GapSemigroup, b: Point) -> Verdict:
    """Residue form of the A-check for numerical semigroups.

    Collects the residues i mod b whose least semigroup representative sits
    below the Frobenius number; the semigroup is A iff that set together
    with {0, b} contains no two consecutive integers.
    """
    if S.cone.dim != 1:
        raise CapabilityError("residue criterion is defined for numerical semigroups")
    b = (int(b[0]),) if isinstance(b, tuple) else (int(b),)
    if not S.contains(b) or b == S.zero:
        raise InputError(f"{b[0]} is not a nonzero element of the semigroup")
    fb = S.frobenius()
    if fb is None:
        return Verdict(True, None)
    residues = {0, b[0]}
    for a in S.apery(b):
        if a != S.zero and a[0] < fb[0]:
            residues.add(a[0] % b[0])
    marked = sorted(residues)
    for lo, hi in zip(marked, marked[1:]):
        if hi == lo + 1:
            return Verdict(False, (lo, hi))
    return Verdict(True, None)


def is_MED(S: GapSemigroup) -> Verdict:
    """Embedding dimension equals multiplicity (numerical only).

    Cross-checked against the Apery characterization: maximal embedding
    dimension holds iff msg(S) is {m} together with the nonzero Apery
    elements of m.
    """
    if S.cone.dim != 1:
        raise CapabilityError("MED is defined for numerical semigroups")
    m = S.multiplicity()
    gens = S.msg()
    value = len(gens) == m[0]
    apery_form = {a for a in S.apery(m) if a != S.zero} | {m}
    if value != (set(gens) == apery_form):
        raise AssertionError("MED characterizations disagree; internal invariant broken")
    return Verdict(value, None if value else (len(gens), m[0]))


def is_arf(S: GapSemigroup) -> Verdict:
    """x + y - z stays in S for all x >= y >= z in S (numerical only).

    Triples are drawn from the small elements: once x exceeds the Frobenius
    number, x + y - z >= x is automatically in S.
    """
    if S.cone.dim != 1:
        raise CapabilityError("Arf is defined for numerical semigroups")
    small = [a[0] for a in S.small_elements()]
    for i, x in enumerate(small):
        for j in range(i + 1):
            y = small[j]
            for k in range(j + 1):
                z = small[k]
                if not S.contains((x + y - z,)):
                    return Verdict(False, (x, y, z))
    return Verdict(True, None)


def is_saturated(S: GapSemigroup) -> Verdict:
    """gcd characterization: s plus the gcd of the elements up to s stays in S.

    Checked for every nonzero small element; larger s land above the
    Frobenius number automatically.  The unbounded integer-combination
    definition survives as a bounded oracle elsewhere.
    """
    if S.cone.dim != 1:
        raise CapabilityError("saturation is defined for numerical semigroups")
    small = [a[0] for a in S.small_elements()]
    d = 0
    for s in small[1:]:
        d = gcd(d, s)
        if not S.contains((s + d,)):
            return Verdict(False, (s,))
    return Verdict(True, None)
