"""Sharp majorization radii for starlike and convex classes with respect to conjugate points."""

__version__ = "0.1.0"

from .bb import BBSolution, QuadratureConfig, bb_residual, kphi, kphi_prime, psi_from_phi, q_of
from .catalog import (
    CASE_IDS,
    FunctionDescriptor,
    custom,
    eval_psi,
    eval_psi_derivative,
    make_case,
    psi_prime_zero_sign,
    specialized_q,
)
from .circle import CircleMinResult, closed_form_m, min_modulus
from .majorization import (
    MoebiusParam,
    SampledFunctionPair,
    check_majorization_radius,
    g_prime_from,
    schwarz_pick_gap,
)
from .radius import RadiusResult, radius_F, radius_table, second_root, solve_radius
from .sharpness import SharpnessReport, K_value, dK_ddelta_at_one, h_value, verify_sharpness
