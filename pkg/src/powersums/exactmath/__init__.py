"""Exact rational polynomials, truncated series and echelon linear algebra."""

from .echelon import EchelonBasis, ModularSpan, RowSpan, echelon_insert, nullspace, rank
from .polynomial import (
    Monomial,
    Polynomial,
    direction_expansion,
    is_block_symmetric,
    linear_form,
    multiply,
    rational,
    substitute_affine,
)
from .series import (
    Const,
    GradedSeries,
    OneMinus,
    Power,
    Product,
    SeriesError,
    Sum,
    expand_series,
    qpoch,
)

__all__ = [
    "Const",
    "EchelonBasis",
    "GradedSeries",
    "ModularSpan",
    "Monomial",
    "OneMinus",
    "Polynomial",
    "Power",
    "Product",
    "RowSpan",
    "SeriesError",
    "Sum",
    "direction_expansion",
    "echelon_insert",
    "expand_series",
    "is_block_symmetric",
    "linear_form",
    "multiply",
    "nullspace",
    "qpoch",
    "rank",
    "rational",
    "substitute_affine",
]
