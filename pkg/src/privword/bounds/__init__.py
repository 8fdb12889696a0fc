from .family import (
    BoundParams,
    ValidityThreshold,
    h,
    hbar,
    hbar_in_pi,
    iter_ln,
    omega,
    rho,
    sigma,
    threshold,
    validity_threshold,
)
from .fitting import (
    empirical_alpha,
    empirical_closed_constant,
    ratio_diagnostics,
    up_membership_check,
)

__all__ = [
    "BoundParams",
    "ValidityThreshold",
    "empirical_alpha",
    "empirical_closed_constant",
    "h",
    "hbar",
    "hbar_in_pi",
    "iter_ln",
    "omega",
    "ratio_diagnostics",
    "rho",
    "sigma",
    "threshold",
    "up_membership_check",
    "validity_threshold",
]
