"""Practical numbers toolkit.

Classification of practical numbers, the practicality function f(n) with
an independent brute-force oracle, segmented sieve counts PR(x) and
N(x,y), additive endpoints with exact densities, and verification scans
for the practicality threshold and the sigma upper bound.
"""

from pracnum._kernel import BACKEND as _backend
from pracnum.arith import (
    Factorization,
    SpfTable,
    build_spf_table,
    divisors,
    factorize,
    phi_count,
    sigma,
)
from pracnum.density import (
    DensityRecord,
    EndpointTable,
    density_record,
    endpoint_count_table,
    endpoints_up_to,
    is_endpoint,
    rho_empirical,
    rho_exact,
    rho_partial_sum,
)
from pracnum.errors import (
    CapacityError,
    DomainError,
    PracnumError,
    TheoremViolationError,
)
from pracnum.hs import (
    HsReport,
    hs_threshold,
    near_miss_search,
    robin_check,
    verify_hs_theorem,
)
from pracnum.practical import (
    PracticalDecomposition,
    decompose,
    f_brute,
    f_fast,
    is_practical,
    is_practical_brute,
    verify_margenstern,
)
from pracnum.sieve import (
    CountPoint,
    SieveSegment,
    margenstern_ratio,
    n_count,
    practical_flags,
    practical_in_window,
    pr_count,
    ratio_grid,
)

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Which scan kernel this install is using: 'compiled' or 'python'."""
    return _backend


__all__ = [
    "CapacityError",
    "CountPoint",
    "DensityRecord",
    "DomainError",
    "EndpointTable",
    "Factorization",
    "HsReport",
    "PracnumError",
    "PracticalDecomposition",
    "SieveSegment",
    "SpfTable",
    "TheoremViolationError",
    "build_spf_table",
    "decompose",
    "density_record",
    "divisors",
    "endpoint_count_table",
    "endpoints_up_to",
    "f_brute",
    "f_fast",
    "factorize",
    "hs_threshold",
    "is_endpoint",
    "is_practical",
    "is_practical_brute",
    "kernel_backend",
    "margenstern_ratio",
    "n_count",
    "near_miss_search",
    "phi_count",
    "pr_count",
    "practical_flags",
    "practical_in_window",
    "ratio_grid",
    "rho_empirical",
    "rho_exact",
    "rho_partial_sum",
    "robin_check",
    "sigma",
    "verify_hs_theorem",
    "verify_margenstern",
]
