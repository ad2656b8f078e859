"""Truncated power series with nonnegative rational exponents.

Exponents live on the lattice ``(1/lattice) * Z``; Hilbert series from the
m-quasi-invariant formulas pass through fractional powers that must cancel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .polynomial import Scalar, rational


class SeriesError(ValueError):
    pass


class GradedSeries:
    """Truncated series ``sum c_e u**e`` with ``0 <= e <= bound``.

    Internally the exponent ``k / lattice`` is stored under the integer ``k``.
    """

    __slots__ = ("lattice", "bound", "_c")

    def __init__(self, coeffs: Mapping[Scalar, Scalar] | None = None, bound: Scalar = 0, lattice: int = 1):
        if lattice < 1:
            raise SeriesError("lattice denominator must be positive")
        self.lattice = lattice
        self.bound = rational(bound)
        self._c: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            e = rational(e)
            if e < 0:
                raise SeriesError(f"negative exponent {e}")
            k = e * lattice
            if k.denominator != 1:
                raise SeriesError(f"exponent {e} is off the 1/{lattice} lattice")
            c = rational(c)
            if c and e <= self.bound:
                self._c[int(k)] = self._c.get(int(k), 0) + c
        self._c = {k: v for k, v in self._c.items() if v}

    @classmethod
    def _raw(cls, data: dict[int, Fraction], bound: Fraction, lattice: int) -> "GradedSeries":
        s = object.__new__(cls)
        s.lattice = lattice
        s.bound = bound
        s._c = data
        return s

    @classmethod
    def one(cls, bound: Scalar, lattice: int = 1) -> "GradedSeries":
        return cls({0: 1}, bound, lattice)

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Scalar], bound: Scalar | None = None) -> "GradedSeries":
        """Integer-exponent series from a list ``[c_0, c_1, ...]``."""
        if bound is None:
            bound = len(coeffs) - 1
        return cls({i: c for i, c in enumerate(coeffs)}, bound)

    # -- inspection --------------------------------------------------------

    def items(self) -> list[tuple[Fraction, Fraction]]:
        return sorted((Fraction(k, self.lattice), c) for k, c in self._c.items())

    def coefficient(self, e: Scalar) -> Fraction:
        k = rational(e) * self.lattice
        if k.denominator != 1:
            return Fraction(0)
        return self._c.get(int(k), Fraction(0))

    def __getitem__(self, e: Scalar) -> Fraction:
        return self.coefficient(e)

    def fractional_terms(self) -> list[tuple[Fraction, Fraction]]:
        return [(e, c) for e, c in self.items() if e.denominator != 1]

    def is_integral(self) -> bool:
        return all(k % self.lattice == 0 for k in self._c)

    def coefficients(self, up_to: int | None = None) -> list[Fraction]:
        """Coefficients of ``u**0 .. u**up_to``; requires integral exponents."""
        bad = self.fractional_terms()
        if bad:
            raise SeriesError(f"series has fractional exponents: {bad[:3]}")
        top = math.floor(self.bound) if up_to is None else up_to
        if top > self.bound:
            raise SeriesError(f"requested degree {top} beyond truncation {self.bound}")
        return [self._c.get(d * self.lattice, Fraction(0)) for d in range(top + 1)]

    def int_coefficients(self, up_to: int | None = None) -> list[int]:
        out = []
        for c in self.coefficients(up_to):
            if c.denominator != 1:
                raise SeriesError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    # -- arithmetic --------------------------------------------------------

    def _align(self, other: "GradedSeries") -> tuple[dict[int, Fraction], dict[int, Fraction], int, Fraction]:
        lat = self.lattice * other.lattice // math.gcd(self.lattice, other.lattice)
        a = {k * (lat // self.lattice): c for k, c in self._c.items()}
        b = {k * (lat // other.lattice): c for k, c in other._c.items()}
        return a, b, lat, min(self.bound, other.bound)

    def relattice(self, lattice: int) -> "GradedSeries":
        if lattice % self.lattice:
            raise SeriesError("new lattice must refine the old one")
        f = lattice // self.lattice
        return GradedSeries._raw({k * f: c for k, c in self._c.items()}, self.bound, lattice)

    def truncate(self, bound: Scalar) -> "GradedSeries":
        b = min(rational(bound), self.bound)
        kmax = b * self.lattice
        return GradedSeries._raw({k: c for k, c in self._c.items() if k <= kmax}, b, self.lattice)

    def __add__(self, other):
        if not isinstance(other, GradedSeries):
            other = GradedSeries({0: other}, self.bound, self.lattice)
        a, b, lat, bound = self._align(other)
        kmax = bound * lat
        out = {k: c for k, c in a.items() if k <= kmax}
        for k, c in b.items():
            if k <= kmax:
                v = out.get(k, 0) + c
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return GradedSeries._raw(out, bound, lat)

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries._raw({k: -c for k, c in self._c.items()}, self.bound, self.lattice)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar) -> "GradedSeries":
        c = rational(c)
        return GradedSeries._raw({k: c * v for k, v in self._c.items()} if c else {}, self.bound, self.lattice)

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        a, b, lat, bound = self._align(other)
        kmax = bound * lat
        out: dict[int, Fraction] = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = k1 + k2
                if k <= kmax:
                    out[k] = out.get(k, 0) + c1 * c2
        return GradedSeries._raw({k: c for k, c in out.items() if c}, bound, lat)

    def __rmul__(self, other):
        return self.scale(other)

    def shift(self, e: Scalar) -> "GradedSeries":
        """Multiply by ``u**e`` (``e`` may be fractional; the lattice refines as needed)."""
        e = rational(e)
        if e < 0:
            raise SeriesError("negative shift")
        lat = self.lattice * e.denominator // math.gcd(self.lattice, e.denominator)
        base = self.relattice(lat)
        step = int(e * lat)
        kmax = self.bound * lat
        return GradedSeries._raw({k + step: c for k, c in base._c.items() if k + step <= kmax}, self.bound, lat)

    def divide_one_minus(self, k: int) -> "GradedSeries":
        """Multiply by ``1 / (1 - u**k)``."""
        if k <= 0:
            raise SeriesError("1/(1-u^k) needs k > 0")
        step = k * self.lattice
        kmax = self.bound * self.lattice
        out: dict[int, Fraction] = {}
        for e in sorted(self._c):
            c = self._c[e]
            j = e
            while j <= kmax:
                out[j] = out.get(j, 0) + c
                j += step
        return GradedSeries._raw({k_: c for k_, c in out.items() if c}, self.bound, self.lattice)

    def times_one_minus(self, k: int) -> "GradedSeries":
        """Multiply by ``1 - u**k``."""
        return self - self.shift(k)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        a, b, _, _ = self._align(other)
        return self.bound == other.bound and a == b

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        body = " + ".join(f"{c}*u^{e}" for e, c in self.items()) or "0"
        return f"GradedSeries({body} + O(u^>{self.bound}))"


# -- expression trees ----------------------------------------------------------


@dataclass(frozen=True)
class Power:
    """``u**exponent`` with a nonnegative rational exponent."""

    exponent: Fraction


@dataclass(frozen=True)
class OneMinus:
    """``(1 - u**k)**exponent``; negative exponents give geometric series."""

    k: int
    exponent: int = 1


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


Expr = Union[Power, OneMinus, Const, Sum, Product]


def qpoch(m: int, exponent: int = 1) -> Product:
    """``(u;u)_m ** exponent`` where ``(u;u)_m = (1-u)(1-u^2)...(1-u^m)``."""
    return Product(tuple(OneMinus(k, exponent) for k in range(1, m + 1)))


def expand_series(expr: Expr, bound: Scalar, lattice: int = 1) -> GradedSeries:
    """Expand an expression tree exactly up to ``u**bound``."""
    bound = rational(bound)

    def go(node) -> GradedSeries:
        if isinstance(node, Const):
            return GradedSeries({0: node.value}, bound, lattice)
        if isinstance(node, (int, Fraction)):
            return GradedSeries({0: node}, bound, lattice)
        if isinstance(node, Power):
            return GradedSeries.one(bound, lattice).shift(node.exponent)
        if isinstance(node, OneMinus):
            if node.k <= 0:
                raise SeriesError(f"bad factor (1-u^{node.k})")
            s = GradedSeries.one(bound, lattice)
            for _ in range(abs(node.exponent)):
                s = s.times_one_minus(node.k) if node.exponent > 0 else s.divide_one_minus(node.k)
            return s
        if isinstance(node, Sum):
            total = GradedSeries({}, bound, lattice)
            for t in node.terms:
                total = total + go(t)
            return total
        if isinstance(node, Product):
            # multiply geometric factors in last, directly on the accumulated series
            acc = GradedSeries.one(bound, lattice)
            for f in node.factors:
                if isinstance(f, OneMinus) and f.k > 0:
                    for _ in range(abs(f.exponent)):
                        acc = acc.times_one_minus(f.k) if f.exponent > 0 else acc.divide_one_minus(f.k)
                else:
                    acc = acc * go(f)
            return acc
        raise SeriesError(f"ill-formed series expression node: {node!r}")

    return go(expr)
