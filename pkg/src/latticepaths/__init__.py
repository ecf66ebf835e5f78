"""Exact counts of rectangular, Catalan, Delannoy and Schröder lattice paths."""
from .core import (
    CountMatrix,
    CountTriangle,
    DomainError,
    NonIntegralError,
    ShapeError,
    binomial,
    diag_pow2,
    mat_mul,
    mat_transpose,
    multinomial,
    pascal_matrix,
    ratio_to_int,
)
from .tables import catalan_triangle, delannoy_table, rect_table, schroder_triangle
from .closedform import (
    b_closed,
    c_closed,
    c_reflect,
    catalan_number,
    g_closed,
    r_closed,
    schroder_number,
)
from .oracle import BudgetExceeded, Constraint, LatticePoint, Step, count_paths, list_paths
from .identities import UnknownIdentity, verify, verify_all, verify_decomposition

__version__ = "0.1.0"
