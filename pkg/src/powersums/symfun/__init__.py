"""Partitions, symmetric group characters, plethysm and quasi-invariant Hilbert series."""

from .characters import (
    CharacterTable,
    IntegralityError,
    KostkaPair,
    add_box_candidates,
    b_coeffs,
    character,
    dim,
    kostka,
    kostka_pair,
    pieri,
    plethysm_c,
    young_permutation_character,
)
from .hilbert import (
    FractionalResidue,
    GorensteinReport,
    WindowTooSmall,
    chi_series,
    gorenstein_check,
    hilbert_P,
    hilbert_P_form2,
    hilbert_P_form3,
)
from .partitions import Partition, conjugate, kappa, partitions

__all__ = [
    "CharacterTable",
    "FractionalResidue",
    "GorensteinReport",
    "IntegralityError",
    "KostkaPair",
    "Partition",
    "WindowTooSmall",
    "add_box_candidates",
    "b_coeffs",
    "character",
    "chi_series",
    "conjugate",
    "dim",
    "gorenstein_check",
    "hilbert_P",
    "hilbert_P_form2",
    "hilbert_P_form3",
    "kappa",
    "kostka",
    "kostka_pair",
    "partitions",
    "pieri",
    "plethysm_c",
    "young_permutation_character",
]
