"""Elliptic-function family generated by the quarter-parameter Gauss
hypergeometric integral: the trio (s, c, d), its coperiodic Weierstrass
function, the associated Jacobi layer, and a verification suite for every
structural identity relating them.
"""

from .amplitude import (
    AmplitudePoint,
    amplitude_point,
    derivatives_closed_form,
    phi_of_u,
    trio_real,
    u_of_phi,
)
from .errors import (
    AccuracyError,
    BracketError,
    ConditioningError,
    ConvergenceError,
    DomainError,
    PoleProximityError,
)
from .extension import (
    GridSpec,
    ResidualReport,
    ZeroPair,
    c_complex,
    d_complex,
    default_grid,
    find_zeros,
    identity_residuals,
    locate_minus_one,
    pole_coefficient,
    s_squared,
)
from .hypergeometric import f_classical, f_quarter, gauss_series
from .jacobi import classical_am, complete_K, sn_cn_dn_complex, sn_cn_dn_real
from .modulus import (
    ModulusContext,
    context_from_jacobi_k,
    context_from_kappa,
    discriminant,
)
from .numerics import Tolerance, agm, integrate_adaptive, solve_monotone
from .verification import run_verification_suite, verify_kappa
from .weierstrass import wp, wp_oracle, wp_prime

__version__ = "0.1.0"

__all__ = [
    "AmplitudePoint",
    "GridSpec",
    "ModulusContext",
    "ResidualReport",
    "Tolerance",
    "ZeroPair",
    "agm",
    "amplitude_point",
    "c_complex",
    "classical_am",
    "complete_K",
    "context_from_jacobi_k",
    "context_from_kappa",
    "d_complex",
    "default_grid",
    "derivatives_closed_form",
    "discriminant",
    "f_classical",
    "f_quarter",
    "find_zeros",
    "gauss_series",
    "identity_residuals",
    "integrate_adaptive",
    "locate_minus_one",
    "phi_of_u",
    "pole_coefficient",
    "run_verification_suite",
    "s_squared",
    "sn_cn_dn_complex",
    "sn_cn_dn_real",
    "solve_monotone",
    "trio_real",
    "u_of_phi",
    "verify_kappa",
    "wp",
    "wp_oracle",
    "wp_prime",
    "AccuracyError",
    "BracketError",
    "ConditioningError",
    "ConvergenceError",
    "DomainError",
    "PoleProximityError",
]
