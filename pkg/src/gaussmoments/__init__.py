"""Moments and absolute moments of the normal distribution for real order nu > -1."""

from .errors import (
    ConvergenceError,
    DomainError,
    InvalidPathError,
    MomentsError,
    OrderOutOfRangeError,
    PoleError,
    ToleranceNotMetError,
)
from .moments import (
    FormulaPath,
    MomentKind,
    MomentQuery,
    MomentResult,
    NormalParams,
    central_abs_moment,
    central_moment,
    consistency_report,
    moment,
    raw_abs_moment,
    raw_moment,
)
from .oracle import OracleEstimate, mc_moment, quad_moment, verify_integral_identities
from .specfun import (
    SeriesControl,
    double_factorial,
    gamma,
    kummer_phi,
    parabolic_cylinder_d,
    recip_gamma,
    rising_factorial,
    tricomi_psi,
)

__version__ = "0.1.0"
