"""Exact domination polynomials of powers of paths and cycles."""

from .dompoly import (
    Family,
    GraphSpec,
    cycle_poly,
    domination_poly,
    gamma1_path,
    path_poly_A,
    path_poly_B,
    path_poly_via_relaxed,
    relaxed_path_poly,
)
from .oracle import (
    SmallGraph,
    brute_domination_poly,
    brute_relaxed_domination_poly,
    build_power_graph,
)
from .polycore import IntPolynomial, binomial_expand, eval_at_one, poly_add, poly_mul, poly_sub
from .unimodal import (
    CertifierReport,
    ModeReport,
    certify_theorem6,
    check_barely_increasing,
    check_log_concave,
    check_ultra_log_concave,
    check_unimodal,
    select_modes,
)

__version__ = "0.1.0"
