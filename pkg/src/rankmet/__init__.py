"""Rank-metric codes, q-systems and linear sets at desk scale: exact
enumeration of maximum-weight codewords and verification of the associated
bounds and extremality characterizations."""

__version__ = "0.1.0"

from .fields import FieldTower, make_field, parse_field_spec, q_binomial
from .codes import (
    Code,
    generalized_weight,
    is_mrd,
    is_nondegenerate,
    make_code,
    max_weight_count,
    min_distance,
    mrd_weight_distribution,
    second_max_weight_offset,
    simplex_code,
    weight,
    weight_distribution,
)
from .systems import (
    HyperplaneCensus,
    PointSpectrum,
    System,
    code_of,
    dual_system,
    find_tangent_hyperplane,
    geometric_dual,
    hyperplane_census,
    hyperplane_weight,
    is_canonical_subgeometry,
    is_scattered,
    linear_set,
    make_system,
    point_spectrum,
    point_weight,
    system_of,
)
from .bounds import (
    BoundReport,
    bound_subgeom_upper,
    bounds_dim2,
    bounds_dim2_dual,
    bounds_dim2_e,
    bounds_k_mlen,
    bounds_k_nlem,
    bounds_k_nlem_e,
    check_max_hypotheses,
    check_subgeom_hypothesis,
    classify_extremal,
    recover_k_mlen,
    recover_k_nlem,
    recover_n,
    recover_n_dual,
    subgeometry_census,
)
from .constructions import (
    gabidulin,
    lifted_poly_code,
    poly_code,
    poly_system,
    redei_code,
    redei_scattered_system,
    vdv_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
