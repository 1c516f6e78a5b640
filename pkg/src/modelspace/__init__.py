"""Numerical toolkit for model spaces, their conjugations and truncated Toeplitz/Hankel operators.

Submodules
----------
``circle``        sampled functions on the unit circle, FFT and Riesz projections
``model_space``   Blaschke products, Takenaka-Malmquist bases, kernels, projections
``antilinear``    linear/antilinear maps, the ``#``-adjoint, direct-sum actions
``operators``     C_theta, C_{alpha,theta/alpha}, (asymmetric) truncated Toeplitz
                  and Hankel matrices, M_z-conjugation classification
``harness``       identity registry, fixtures and reports
``cli``           command-line interface
"""
from .antilinear import (
    AntilinearMap,
    LinearMap,
    asymmetry,
    block_diag,
    boxplus,
    c_pair,
    check_antiselfadjoint,
    check_conjugation,
    compose,
    diamond,
    map_from_json,
    map_to_json,
    sharp,
)
from .circle import CircleFunction, FourierWindow, inner_product, pointwise, riesz_project, sample_fn
from .errors import (
    AliasingError,
    ConfigurationError,
    DimensionError,
    DomainError,
    EmptyBasisError,
    ModelSpaceError,
    TruncationError,
    UnknownIdentityError,
    ValidationError,
)
from .harness import (
    IdentityReport,
    RunConfig,
    fixture_suite,
    registry_ids,
    run_suite,
    verify_corollary_5_3,
    verify_identity,
)
from .model_space import (
    BlaschkeProduct,
    LaurentSymbol,
    ModelBasis,
    blaschke_divide,
    blaschke_eval,
    kernels,
    model_project,
    tm_basis,
)
from .operators import (
    SplitModelSpace,
    atto_matrix,
    c_split_matrix,
    c_theta_matrix,
    dichotomy_check,
    hankel_matrix,
    mz_conjugation_enumerate,
    split_space,
    tilde_hankel_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "CircleFunction",
    "FourierWindow",
    "inner_product",
    "pointwise",
    "riesz_project",
    "sample_fn",
    "AntilinearMap",
    "LinearMap",
    "asymmetry",
    "block_diag",
    "boxplus",
    "c_pair",
    "check_antiselfadjoint",
    "check_conjugation",
    "compose",
    "diamond",
    "map_from_json",
    "map_to_json",
    "sharp",
    "AliasingError",
    "ConfigurationError",
    "DimensionError",
    "DomainError",
    "EmptyBasisError",
    "ModelSpaceError",
    "TruncationError",
    "UnknownIdentityError",
    "ValidationError",
    "IdentityReport",
    "RunConfig",
    "fixture_suite",
    "registry_ids",
    "run_suite",
    "verify_corollary_5_3",
    "verify_identity",
    "BlaschkeProduct",
    "LaurentSymbol",
    "ModelBasis",
    "blaschke_divide",
    "blaschke_eval",
    "kernels",
    "model_project",
    "tm_basis",
    "SplitModelSpace",
    "atto_matrix",
    "c_split_matrix",
    "c_theta_matrix",
    "dichotomy_check",
    "hankel_matrix",
    "mz_conjugation_enumerate",
    "split_space",
    "tilde_hankel_matrix",
]
