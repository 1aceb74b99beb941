"""Exact wall-and-chamber geometry for a two-parameter slice of stability
conditions on a Picard-rank-one K3 surface and on the projective plane,
with the global-section caps and higher-rank Clifford indices it yields.

All core computation is exact rational (or quadratic-surd) arithmetic;
floating point appears only when SVG coordinates are printed.
"""

from .errors import DegenerateWallError, DomainError, RegionError
from .numerics import (
    QuadraticRoot,
    compare_root,
    compare_values,
    floor_sqrt,
    floor_sqrt_int_sum,
    quadratic_root,
    rational_between,
    sign_plus_root,
    sign_two_roots,
    sqrt_enclosure,
)
from .lattice import (
    ChernCharacter,
    PushforwardSpec,
    SurfaceK3,
    admits_stable_object,
    euler_characteristic,
    euler_pairing,
    is_primitive,
    pushforward_class,
)
from .stability import (
    INFINITE_SLOPE,
    ProjPoint,
    SlicePoint,
    central_charge,
    gamma_value,
    pr,
    pr_not_in_gamma_plus,
    tilt_slope,
)
from .walls import (
    ON_GAMMA,
    ON_VERTICAL,
    BetaBounds,
    GammaHit,
    WallSegment,
    first_wall_beta_bounds,
    intersect_gamma,
    wall_between,
)
from .hn_polygon import (
    BoundReport,
    ChainRegion,
    HNPolygon,
    Triangle,
    ZbarPoint,
    bounding_triangle,
    h0_bound_from_polygon,
    h0_closed_form_bound,
    max_convex_chain,
    ns_norm_floor,
    ns_norm_sq,
    polygon_in_region,
    region_from_triangle,
    zbar,
)
from .clifford import (
    CliffordQuery,
    LMConstruction,
    clifford_index_k3,
    clifford_of_bundle,
    cliff_degree_lower_bound,
    closed_form_cap,
    corollary_lower_bound,
    exceeds_corollary_floor,
    lm_construction,
    mercat_status,
    nonnegative_index,
    sharp_example,
)
from .plane_curves import (
    CliffordPlaneResult,
    PlaneCurveSpec,
    SurfacePlane,
    L_value,
    clifford_plane,
    gamma_tilde,
    h0_bound_plane,
    hom_bound_p2,
    phase_range_p2,
    pushforward_class_p2,
)
from .verifier import (
    SUITES,
    GridSpec,
    VerificationReport,
    run_suite,
    step2_region,
    step2_window,
    verify_Q,
    verify_fs,
    verify_lE_cap,
    verify_plane,
    verify_rank2,
    verify_sharpness,
)

__version__ = "0.1.0"
