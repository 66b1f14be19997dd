"""Exact computations for left-invariant almost complex structures with Norden metric."""

from .analysis import Geometry, analyze, family_manifold
from .curvature import (
    ConnectionCoefficients,
    classify_plane,
    covariant_derivative_R,
    curvature,
    curvature_double_bracket,
    holo_bisectional,
    levi_civita,
    ricci_and_scalar,
    sectional_curvature,
    w3_identity_defect,
    weyl,
)
from .documents import load_manifold, save_manifold
from .lie import (
    LieStructure,
    bracket,
    build_w3_general,
    build_w3_killing,
    invariance_defect,
    jacobi_defect,
)
from .parser import ParseError, parse_scalar
from .polynomial import Polynomial, evaluate, perfect_square_root, poly_arith, symbols
from .structure import (
    ClassificationFlags,
    NordenManifold,
    F_tensor,
    associated_metric,
    check_norden,
    classify,
    isotropic_kahler_flag,
    lie_form,
    nijenhuis,
    norm_nabla_J,
    norm_nijenhuis,
    standard_J,
    standard_metric,
)
from .tensor import MetricMatrix, Tensor, full_contract, metric_inverse, pi1, psi1
from .verify import run_paper_suite

__version__ = "0.1.0"
