"""Orthogonality of normal matrices over the two-element tropical semiring.

Entries live in {0, -1} with max as addition and truncated plus as
multiplication; a normal matrix has a zero diagonal.  The package decides
mutual orthogonality (A*B = Z = B*A), classifies the zeros of indicator
matrices, generates the minimal-pair families, runs exhaustive and
branch-and-bound searches for the extremal zero counts, handles bordered
extensions, and builds the three relation graphs.
"""

from .core import (
    MINUS_ONE,
    ZERO,
    DimensionMismatch,
    MatrixFormatError,
    NormalMatrix,
    all_normal_matrices,
    all_zero,
    format_matrix,
    identity,
    make_elementary,
    mat_odot,
    mat_oplus,
    nu,
    parse_matrix,
    permute_conjugate,
    sigma,
    transpose,
)
from .ortho import IndicatorReport, ZeroClass, indicator, is_orthogonal, orth_set
from .families import (
    Atom,
    FamilySpec,
    MmVariant,
    mm_classify,
    mm_pair,
    spec_contains,
    spec_generic,
)
from .search import (
    SearchInconclusive,
    ThetaCertificate,
    check_theorem_theta,
    enumerate_orthogonal_pairs,
    theta_bounded,
    theta_delta_exhaustive,
    theta_exhaustive,
)
from .border import (
    BorderedBlocks,
    BorderVector,
    border_compose,
    border_orthogonality_condition,
    border_split,
    reduce_size,
    self_ortho_border_condition,
)
from .graphs import ORTHO, VNL, WNL, OrthoGraph, adjacent, build, diameter, dist, girth

__all__ = [
    "MINUS_ONE",
    "ZERO",
    "DimensionMismatch",
    "MatrixFormatError",
    "NormalMatrix",
    "all_normal_matrices",
    "all_zero",
    "format_matrix",
    "identity",
    "make_elementary",
    "mat_odot",
    "mat_oplus",
    "nu",
    "parse_matrix",
    "permute_conjugate",
    "sigma",
    "transpose",
    "IndicatorReport",
    "ZeroClass",
    "indicator",
    "is_orthogonal",
    "orth_set",
    "Atom",
    "FamilySpec",
    "MmVariant",
    "mm_classify",
    "mm_pair",
    "spec_contains",
    "spec_generic",
    "SearchInconclusive",
    "ThetaCertificate",
    "check_theorem_theta",
    "enumerate_orthogonal_pairs",
    "theta_bounded",
    "theta_delta_exhaustive",
    "theta_exhaustive",
    "BorderedBlocks",
    "BorderVector",
    "border_compose",
    "border_orthogonality_condition",
    "border_split",
    "reduce_size",
    "self_ortho_border_condition",
    "ORTHO",
    "VNL",
    "WNL",
    "OrthoGraph",
    "adjacent",
    "build",
    "diameter",
    "dist",
    "girth",
]

__version__ = "0.1.0"
