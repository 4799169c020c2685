"""Booth lemniscate starlikeness radii with brute-force certification."""

from .classes import (
    Branch,
    Convex,
    Fournier,
    FunctionClass,
    InclusionVerdict,
    Janowski,
    MClass,
    Parvatham,
    RadiusResult,
    Starlike,
    StarlikeOrder,
    bs_radius,
    class_disc,
    inclusion_holds,
    log_derivative,
)
from .discs import (
    CaseThresholds,
    Disc,
    admissible_interval,
    circumscribed_radius,
    critical_points,
    h_profile,
    inscribed_radius,
    s_value,
    thresholds,
)
from .errors import DomainError
from .oracles import (
    ContainmentReport,
    SharpnessWitness,
    SingleCrossingError,
    oracle_bs_radius,
    oracle_circumscribed,
    oracle_inscribed,
    sharpness_witness,
    subordination_check,
)
from .region import (
    MembershipVerdict,
    RegionParam,
    boundary_point,
    boundary_polyline,
    contains,
    eval_map,
    polar_boundary_radius,
)

__version__ = "0.1.0"
