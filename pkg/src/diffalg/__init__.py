"""Exact differential algebra over Q(t).

Differential polynomials with Ritt reduction, Wronskian dependence tests,
power-series fundamental systems, Galois-group classification of
first-order antiderivative and exponential extensions, and algebraic
matrix groups over the constants.
"""

from .basefield import (
    BaseField,
    Poly,
    RatFunc,
    Rational,
    antiderivative_in_field,
    hermite_reduce,
    log_derivative_decompose,
    poly_gcd,
    poly_lcm,
    poly_xgcd,
    smallest_exponential_index,
    squarefree_decomposition,
)
from .diffpoly import (
    DerivVar,
    DiffPoly,
    ReductionResult,
    certificate_checks,
    in_general_ideal,
    ritt_reduce,
    var,
)
from .errors import (
    DegeneratePoint,
    DiffAlgError,
    IncompleteAssignment,
    MixedArity,
    NonMemberSample,
    NotApplicable,
    NotFundamental,
    NotInCatalog,
    ParseError,
    PoleAtBasePoint,
    ShapeError,
    SingularTransform,
)
from .galois import (
    GaloisDescriptor,
    GroupKind,
    classify_antiderivative_extension,
    classify_exponential_extension,
    descriptor_dimension,
    descriptor_trdeg,
)
from .matgroup import (
    AlgebraicMatrixGroup,
    ConstMatrix,
    GroupLabel,
    catalog_group,
    descriptor_to_matrix_group,
    gl_invariance_witness,
    group_closure_sample_check,
    group_contains,
    identity_component_dimension,
    wronskian_minor_polynomials,
)
from .odeseries import (
    TruncatedSeries,
    fundamental_system_series,
    ode_residual,
    series_expand,
    series_wronskian,
)
from .parsing import (
    parse_diffpoly,
    parse_fraction,
    parse_matrix,
    parse_ratfunc,
)
from .wronskian import (
    FundamentalSystem,
    LinearODE,
    apply_constant_matrix,
    dependence_certificate,
    dependent_over_constants,
    ode_from_fundamental_system,
    wronskian,
    wronsky_matrix,
)

__all__ = [
    "AlgebraicMatrixGroup",
    "BaseField",
    "ConstMatrix",
    "DegeneratePoint",
    "DerivVar",
    "DiffAlgError",
    "DiffPoly",
    "FundamentalSystem",
    "GaloisDescriptor",
    "GroupKind",
    "GroupLabel",
    "IncompleteAssignment",
    "LinearODE",
    "MixedArity",
    "NonMemberSample",
    "NotApplicable",
    "NotFundamental",
    "NotInCatalog",
    "ParseError",
    "Poly",
    "PoleAtBasePoint",
    "RatFunc",
    "Rational",
    "ReductionResult",
    "ShapeError",
    "SingularTransform",
    "TruncatedSeries",
    "antiderivative_in_field",
    "apply_constant_matrix",
    "catalog_group",
    "certificate_checks",
    "classify_antiderivative_extension",
    "classify_exponential_extension",
    "dependence_certificate",
    "dependent_over_constants",
    "descriptor_dimension",
    "descriptor_to_matrix_group",
    "descriptor_trdeg",
    "fundamental_system_series",
    "gl_invariance_witness",
    "group_closure_sample_check",
    "group_contains",
    "hermite_reduce",
    "identity_component_dimension",
    "in_general_ideal",
    "log_derivative_decompose",
    "ode_from_fundamental_system",
    "ode_residual",
    "parse_diffpoly",
    "parse_fraction",
    "parse_matrix",
    "parse_ratfunc",
    "poly_gcd",
    "poly_lcm",
    "poly_xgcd",
    "ritt_reduce",
    "series_expand",
    "series_wronskian",
    "smallest_exponential_index",
    "squarefree_decomposition",
    "var",
    "wronskian",
    "wronskian_minor_polynomials",
    "wronsky_matrix",
]
