"""Exception hierarchy shared across the package.

InputError covers malformed or inconsistent input (bad gap sets, points
outside the cone, invalid orders); tools report it as exit code 2.
InfeasibleError covers well-formed questions whose answer is "no such
object" (an infeasible gensys instance, a set that is not adjoinable);
tools report it as exit code 1.
"""
from __future__ import annotations


class CsgError(Exception):
    pass


class InputError(CsgError, ValueError):
    pass


class ClosureViolation(InputError):
    """Gap complement is not closed under addition; carries a witness pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotPresent(CsgError):
    """A requested invariant does not exist for this semigroup."""


class CapabilityError(CsgError):
    """The inputs fall outside the stated preconditions of an operation."""


class InfeasibleError(CsgError):
    """No object with the requested properties exists."""


class NotAnAfSet(InfeasibleError):
    """The given set is contained in no member of the requested family."""
