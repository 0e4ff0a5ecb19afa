"""Exact-arithmetic toolkit for the curve-section lattices, blow-up
towers, linear systems, and projective models behind the known
Enriques-Fano threefolds."""

from .blowup import (
    BlowupModel,
    Center,
    check_zero_restriction,
    divisible_mod_trivial,
    push_blowup,
    triple_product,
)
from .boxsearch import phi_box_min
from .classexpr import parse_class_expr
from .enumeration import enumerate_sids, random_normalized_sids
from .isotropy import isotropic_fiber, phi
from .lattice import (
    Divisibility,
    E,
    E12,
    InvalidClassError,
    K_S,
    Lattice,
    MapKind,
    NumClass,
    PicClass,
    SidCoefficients,
    allowed_phis,
    genus_of,
    is_primitive,
    k3_degree_bound,
    map_kind_phi_constraint,
    pairing,
    two_divisibility,
)
from .linsys import (
    CoefficientSpace,
    Line,
    LinSysSpec,
    member_contains_line,
    system_dimension,
    tangent_cone,
    verify_expected_form,
)
from .models import (
    fixed_points_on_cone,
    genus_from_cone,
    h13_relations_hold,
    involution_preserves_ideal,
    load_pef13,
    parametrization_vanishes,
    pullback_decomposition_check,
    zmap_invariance,
)
from .tables import verify_table1, verify_table2

__version__ = "0.1.0"
