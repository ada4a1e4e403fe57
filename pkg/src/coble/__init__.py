"""Exact-arithmetic toolkit for boundary involutions of Coble surfaces.

The package classifies triples of binary quadratics (the boundary
restrictions of three disjoint exceptional curves) through the involutions
of the pencils they span, certifies the underlying collinearity statements
with Pascal hexagons, checks the relevant Picard-lattice identities, and
handles the two projective models involved: the ten-nodal plane sextic and
the singular quintic with a tetrahedron of multiple edges. All arithmetic
is exact over Q.
"""

from .binforms import (
    BinForm,
    coeff_matrix_det,
    discriminant,
    gcd_forms,
    jacobian_pair,
    resultant,
    substitute,
)
from .engine import (
    CODIM3_FAMILY,
    JACOBIAN_DET_CONSTANT,
    LABELS,
    NODAL_IDENTITY,
    POMPILJ_FAILS,
    Classification,
    RestrictionTriple,
    classify,
    codim3_family_triple,
    conjugate_triple,
    generate_case,
    prove_det_identity_symbolically,
    sigmas_and_composite,
    verify_det_identity,
)
from .errors import CobleError, DegenerateError, SchemaError
from .linalg import Mat
from .moebius import (
    MoebiusMap,
    compose,
    fixed_quadratic,
    involution_from_fixed_quadratic,
    involution_from_pencil,
    sym2_lift,
)
from .mpoly import MPoly
from .piclat import (
    DivClass,
    arithmetic_genus,
    intersect,
    is_minus_one,
    is_minus_two,
    named_class,
    verify_paper_table,
)
from .projplane import (
    Conic,
    DependenceCertificate,
    PascalResult,
    PlaneLine,
    PlanePoint,
    collinear,
    dependence_certificate,
    pascal_points,
    pole_of_quadratic,
    veronese,
)
from .quintic import (
    QuinticMember,
    apply_group_element,
    expand_equation,
    is_codim3_member,
    moduli_dimensions,
    multiplicity_along_line,
    multiplicity_at_point,
    orbit_invariants,
    polar_condition,
    tetrahedron_report,
)
from .sextic import (
    SexticParam,
    implicitize,
    is_singular_at,
    make_param_with_fibers,
    node_fiber,
)

__version__ = "0.1.0"

__all__ = [
    "BinForm",
    "CODIM3_FAMILY",
    "Classification",
    "CobleError",
    "Conic",
    "DegenerateError",
    "DependenceCertificate",
    "DivClass",
    "JACOBIAN_DET_CONSTANT",
    "LABELS",
    "MPoly",
    "Mat",
    "MoebiusMap",
    "NODAL_IDENTITY",
    "POMPILJ_FAILS",
    "PascalResult",
    "PlaneLine",
    "PlanePoint",
    "QuinticMember",
    "RestrictionTriple",
    "SchemaError",
    "SexticParam",
    "apply_group_element",
    "arithmetic_genus",
    "classify",
    "codim3_family_triple",
    "coeff_matrix_det",
    "collinear",
    "compose",
    "conjugate_triple",
    "dependence_certificate",
    "discriminant",
    "expand_equation",
    "fixed_quadratic",
    "gcd_forms",
    "generate_case",
    "implicitize",
    "intersect",
    "involution_from_fixed_quadratic",
    "involution_from_pencil",
    "is_codim3_member",
    "is_minus_one",
    "is_minus_two",
    "is_singular_at",
    "jacobian_pair",
    "make_param_with_fibers",
    "moduli_dimensions",
    "multiplicity_along_line",
    "multiplicity_at_point",
    "named_class",
    "node_fiber",
    "orbit_invariants",
    "pascal_points",
    "polar_condition",
    "pole_of_quadratic",
    "prove_det_identity_symbolically",
    "resultant",
    "sigmas_and_composite",
    "substitute",
    "sym2_lift",
    "tetrahedron_report",
    "verify_det_identity",
    "verify_paper_table",
    "veronese",
]
