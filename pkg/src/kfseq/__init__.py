"""Kakutani-Fibonacci partitions, points and interval exchange, in exact arithmetic."""

from .config import DomainError, ResourceLimitError
from .discrepancy import (
    DiscrepancyReport,
    extreme_discrepancy,
    low_discrepancy_profile,
    partition_discrepancy,
    star_discrepancy,
)
from .golden import (
    ALPHA,
    ONE,
    ZERO,
    GoldenNumber,
    GoldenRational,
    Sign,
    alpha_pow,
    gf_cmp,
    gf_mul,
    gf_to_decimal,
    parse_exact,
)
from .iet import apply_T, apply_T_inverse, branch_params, locate_branch, orbit
from .partition import Partition, counts, kakutani_sequence, refine
from .points import block, verify_orbit_equivalence, xi_stream
from .qmc import birkhoff_average, qmc_integrate
from .stacking import advance, certify_against_T, initial_columns

__version__ = "0.1.0"
