"""Hilbert series of the algebras of m-quasi-invariants from character data.

Three routes are implemented: the general ``(r, s)`` sum over ``b``
coefficients, and for ``s = 1`` the box-adding form over ``c`` coefficients
and the inverse-Kostka form. Intermediate sums carry exponents on the
``1/(2m)`` lattice; only the total has to be integral.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..exactmath import GradedSeries, OneMinus, Polynomial, Power, Product, expand_series
from .characters import add_box_candidates, b_coeffs, dim, factorial_ratio, kostka_pair, plethysm_c
from .partitions import Partition, check_partition, hooks_and_legs, kappa, partitions, scale


class FractionalResidue(ArithmeticError):
    """Fractional exponents survived the summation."""


class WindowTooSmall(ValueError):
    pass


def chi_series(nu: Partition, D: int, lattice: int = 1) -> GradedSeries:
    """Graded multiplicity of the irreducible ``nu`` in ``C[x_1..x_n]``.

    ``prod over boxes of t**leg / (1 - t**hook)``
    """
    nu = check_partition(nu) if nu else ()
    hl = hooks_and_legs(nu)
    expr = Product((Power(sum(leg for _, leg in hl)),) + tuple(OneMinus(h, -1) for h, _ in hl))
    return expand_series(expr, D, lattice)


def _finish(total: GradedSeries, D: int) -> GradedSeries:
    residue = total.fractional_terms()
    if residue:
        raise FractionalResidue(f"fractional powers did not cancel: {residue[:4]}")
    coeffs = total.coefficients(D)
    if coeffs[0] != 1:
        nonzero = [e for e, c in total.items() if c]
        shift = nonzero[0] if nonzero else None
        raise FractionalResidue(f"constant term is {coeffs[0]}, lowest exponent present is {shift}")
    for d, c in enumerate(coeffs):
        if c < 0 or c.denominator != 1:
            raise FractionalResidue(f"coefficient {c} at degree {d} is not a nonnegative integer")
    return GradedSeries.from_coefficients(coeffs, D)


def _check_params(r: int, s: int, m: int) -> None:
    if s < 1 or m <= s:
        raise ValueError(f"need m > s >= 1, got m={m}, s={s}")
    if r < 1:
        raise ValueError("r must be positive")
    if r == 1:
        warnings.warn("r = 1 lies outside the standing hypothesis r >= 2; used as a cross-check only", stacklevel=3)


def hilbert_P(r: int, s: int, m: int, D: int) -> GradedSeries:
    """Hilbert series of the m-quasi-invariants with ``r`` heavy and ``s`` light variables, up to ``t**D``."""
    _check_params(r, s, m)
    n = m * r + s
    lat = 2 * m
    weights: dict[Partition, int] = {}
    for lam in partitions(r):
        dl = dim(lam)
        for nu, b in b_coeffs(lam, s, m).items():
            weights[nu] = weights.get(nu, 0) + dl * b
    total = GradedSeries({}, D, lat)
    for nu, w in weights.items():
        if w:
            e = Fraction(n * (n - 1) - 2 * kappa(nu), 2 * m)
            if e <= D:
                total = total + chi_series(nu, D, lat).shift(e).scale(w)
    return _finish(total, D)


def _box_adding_sum(weights: dict[Partition, int], r: int, m: int, D: int) -> GradedSeries:
    n = m * r + 1
    lat = 2 * m
    hat_weights: dict[Partition, int] = {}
    for nu, w in weights.items():
        for hat in add_box_candidates(nu, m):
            hat_weights[hat] = hat_weights.get(hat, 0) + w
    total = GradedSeries({}, D, lat)
    for hat, w in hat_weights.items():
        if w:
            e = Fraction(r * n, 2) - Fraction(kappa(hat), m)
            if e <= D:
                total = total + chi_series(hat, D, lat).shift(e).scale(w)
    return total


def hilbert_P_form2(r: int, m: int, D: int) -> GradedSeries:
    """``s = 1`` Hilbert series via plethysm coefficients and box adding."""
    _check_params(r, 1, m)
    weights: dict[Partition, int] = {}
    for lam in partitions(r):
        dl = dim(lam)
        for nu, c in plethysm_c(lam, m).items():
            weights[nu] = weights.get(nu, 0) + dl * c
    return _finish(_box_adding_sum(weights, r, m, D), D)


def hilbert_P_form3(r: int, m: int, D: int) -> GradedSeries:
    """``s = 1`` Hilbert series via ``r!/alpha!`` weights and the inverse Kostka matrix."""
    _check_params(r, 1, m)
    kp = kostka_pair(m * r)
    weights: dict[Partition, int] = {}
    for alpha in partitions(r):
        ratio = factorial_ratio(alpha)
        malpha = scale(alpha, m)
        for nu in partitions(m * r):
            k = kp.k_inv(malpha, nu)
            if k:
                weights[nu] = weights.get(nu, 0) + ratio * k
    return _finish(_box_adding_sum(weights, r, m, D), D)


@dataclass(frozen=True)
class GorensteinReport:
    r: int
    m: int
    numerator: Polynomial
    stabilized: bool
    palindromic: bool
    degree: int
    expected_degree: int

    @property
    def degree_consistent(self) -> bool:
        return self.degree == self.expected_degree


def gorenstein_check(r: int, m: int, D: int) -> GorensteinReport:
    """Numerator ``P(t) * prod_{i<=r+1} (1 - t**i)`` and its palindromicity."""
    if m < 2:
        raise ValueError("m must be at least 2")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        series = hilbert_P(r, 1, m, D)
    for i in range(1, r + 2):
        series = series.times_one_minus(i)
    coeffs = [int(c) for c in series.coefficients(D)]
    tail = max(r + 1, 3)
    stabilized = len(coeffs) > tail and all(c == 0 for c in coeffs[-tail:])
    if not stabilized:
        raise WindowTooSmall(f"numerator not yet a polynomial within degree {D}; raise D")
    top = max(i for i, c in enumerate(coeffs) if c)
    body = coeffs[: top + 1]
    n = m * r + 1
    numerator = Polynomial(1, {(i,): c for i, c in enumerate(body)})
    return GorensteinReport(
        r=r,
        m=m,
        numerator=numerator,
        stabilized=stabilized,
        palindromic=body == body[::-1],
        degree=top,
        expected_degree=n * (r - 1) + (r + 1) * (r + 2) // 2,
    )
