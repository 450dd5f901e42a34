"""Dense simplex LP solver over exact rationals, with a float64 mode."""

from .problem import (
    DimensionError,
    DualInfeasibleError,
    IterationLimitError,
    LpError,
    LpProblem,
    LpSolution,
    dump,
    dumps,
    loads,
    residuals,
)
from .solver import (
    KERNEL,
    CertificateError,
    certify,
    certify_float,
    rationalize_dual,
    solve,
    verify_optimality,
)

__all__ = [
    "KERNEL", "CertificateError", "DimensionError", "DualInfeasibleError",
    "IterationLimitError", "LpError", "LpProblem", "LpSolution", "certify",
    "certify_float", "dump", "dumps", "loads", "rationalize_dual", "residuals",
    "solve", "verify_optimality",
]
