"""Sharp extremal values and variability regions of log(f(z)/z).

Covers the classes S (univalent), S* (starlike), K (convex) and C
(close-to-convex) on the unit disk, together with brute-force oracles that
check every closed form independently.
"""

from .core import NEG_INF, POS_INF, BoundaryCurve, ExtendedReal, extended_compare, psi_from_phi
from .ctc_bounds import b0_root, crossover, p_branch, phi_ctc, psi_minus_ctc, q_branch
from .ctc_geometry import (
    TangencyPair,
    common_tangent,
    gamma,
    gamma_tangent,
    gamma_turning_rate,
    hull_boundary,
    pointwise_region_h,
    region_contains,
)
from .disk_classes import (
    critical_angles,
    grunsky_region,
    marx_boundary,
    marx_contains,
    phi_s,
    phi_star,
    phi_star_full_minus,
    psi_s,
)
from .errors import (
    DegenerateExponentError,
    DegenerateRegionError,
    DirectionDegenerateError,
    DomainError,
    QuadratureFailure,
    TangencyNotFoundError,
)
from .power import PowerExponent, power_bound, power_eval

__version__ = "0.1.0"
