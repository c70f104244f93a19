"""
Boundary of the Milnor fiber of the Hirzebruch singularity z^m - x^k y^l = 0.

Everything is computed in exact integer and rational arithmetic: the lens
space bounding the normalization, the Seifert invariants and canonical
plumbing graph of the Milnor-fiber boundary, and the vertical monodromies
they are built from.
"""
from .arith import cf_eval, cf_expand, egcd, mod_inverse_of_negative
from .errors import (
    DomainError,
    GermError,
    HirzebruchError,
    InvariantViolation,
    IrreducibilityError,
    NotSingularError,
    OrderingError,
    UnsupportedCaseError,
    UnsupportedShapeError,
)
from .germ import DerivedGcds, Germ, derive, make_germ
from .lens import S3, LensSpace, lens_equivalent
from .monodromy import (
    FiberData,
    MonodromyDescriptor,
    fiber_data_xside,
    fiber_data_yside,
    torus_intersection_number,
    vertical_monodromy_xside,
    vertical_monodromy_yside,
)
from .normalization import normalization_boundary, normalization_plumbing
from .plumbing import (
    IntersectionForm,
    PlumbingGraph,
    build_bamboo,
    build_star,
    graphs_isomorphic,
    intersection_form,
    is_negative_definite,
    milnor_boundary_plumbing,
    to_dot,
    to_json,
)
from .report import Verdict, compare_report
from .seifert import (
    SeifertLeaf,
    SeifertPresentation,
    beta_identity,
    euler_from_gluing,
    hat_leaf,
    lens_space_classification,
    nielsen_to_seifert,
    rational_euler_number,
    seifert_presentation,
)

__version__ = "0.1.0"
