"""Exact-arithmetic invariants and family enumeration for C-semigroups."""
from .errors import (
    CapabilityError,
    ClosureViolation,
    CsgError,
    InfeasibleError,
    InputError,
    NotAnAfSet,
    NotPresent,
)
from .geometry import Cone, GeometryError, Point
from .orders import (
    MonomialOrder,
    OrderError,
    enumerate_up_to,
    from_right_matrix,
    grlex,
    lex,
    matrix_order,
    successor,
)
from .semigroup import GapSemigroup

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ClosureViolation",
    "Cone",
    "CsgError",
    "GapSemigroup",
    "GeometryError",
    "InfeasibleError",
    "InputError",
    "MonomialOrder",
    "NotAnAfSet",
    "NotPresent",
    "OrderError",
    "Point",
    "enumerate_up_to",
    "from_right_matrix",
    "grlex",
    "lex",
    "matrix_order",
    "successor",
    "__version__",
]
