from .chevalley import (
    GroupElement,
    chevalley_h,
    chevalley_w,
    chevalley_x,
    dual_action,
    random_borel,
    random_torus,
    random_unipotent,
)
from .degeneration import (
    CurveReport,
    DegenerationCurve,
    all_case5_triples,
    case5_curve,
    case5_expected,
    case5_table_order,
    verify_case5,
    verify_curve,
)
from .functional import Functional, basis_element, coefficient_position, f_of, f_sigma, random_functional
from .geometry import (
    lower_positions,
    orbit_dimension,
    pi_rank,
    rank_profile,
    rescale_to,
    rescaling_generator,
    rescaling_step_holds,
    tangent_matrix,
    unipotent_orbit_dimension,
)

__all__ = [
    'GroupElement', 'chevalley_h', 'chevalley_w', 'chevalley_x', 'dual_action', 'random_borel',
    'random_torus', 'random_unipotent', 'CurveReport', 'DegenerationCurve', 'all_case5_triples',
    'case5_curve', 'case5_expected', 'case5_table_order', 'verify_case5', 'verify_curve',
    'Functional', 'basis_element', 'coefficient_position', 'f_of', 'f_sigma', 'random_functional',
    'lower_positions', 'orbit_dimension', 'pi_rank', 'rank_profile', 'rescale_to',
    'rescaling_generator', 'rescaling_step_holds', 'tangent_matrix', 'unipotent_orbit_dimension',
]
