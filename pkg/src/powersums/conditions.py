"""Quasi-invariance conditions compiled to exact linear systems.

Each condition maps a polynomial to a list of residual polynomials that
must vanish identically. Hyperplane conditions are imposed by substituting
the constrained variables with a shared fresh variable (stored in one of
the freed slots) and comparing coefficients; nothing is sampled.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .exactmath import EchelonBasis, Polynomial, direction_expansion, nullspace, rational, substitute_affine
from .genalg import SymmetricCoordinates


class ConditionError(ValueError):
    pass


class NonPolynomialResult(ArithmeticError):
    """Raised when a difference operator leaves a non-polynomial quotient."""


def _var(n: int, i: int) -> Polynomial:
    return Polynomial.variable(n, i)


def _identity(n: int) -> list[Polynomial]:
    return [_var(n, i) for i in range(n)]


def _nonzero(name: str, value) -> Fraction:
    v = rational(value)
    if not v:
        raise ConditionError(f"{name} must be nonzero")
    return v


def _positive(name: str, value: int) -> int:
    if int(value) != value or value < 1:
        raise ConditionError(f"{name} must be a positive integer, got {value}")
    return int(value)


# -- type (1,1) -----------------------------------------------------------------


@dataclass(frozen=True)
class MultiplicativeLine:
    """``f(t x, c q x) = f(x, c x)`` on ``C[y, z]``; ``c = 1`` is the plain form."""

    q: Fraction
    t: Fraction
    c: Fraction = Fraction(1)
    homogeneous = True

    def __post_init__(self):
        for name in ("q", "t", "c"):
            object.__setattr__(self, name, _nonzero(name, getattr(self, name)))

    def images(self, f: Polynomial) -> list[Polynomial]:
        x = _var(1, 0)
        moved = substitute_affine(f, [x.scale(self.t), x.scale(self.c * self.q)])
        base = substitute_affine(f, [x, x.scale(self.c)])
        return [moved - base]


@dataclass(frozen=True)
class InfinitesimalLine:
    """``((a c d/dz - d/dy) f)(x, c x) = 0``, the ``t -> 1`` limit of the line condition."""

    a: Fraction
    c: Fraction = Fraction(1)
    homogeneous = True

    def __post_init__(self):
        object.__setattr__(self, "a", _nonzero("a", self.a))
        object.__setattr__(self, "c", _nonzero("c", self.c))

    def images(self, f: Polynomial) -> list[Polynomial]:
        x = _var(1, 0)
        g = f.derivative(1).scale(self.a * self.c) - f.derivative(0)
        return [substitute_affine(g, [x, x.scale(self.c)])]


# -- type (r,s) -----------------------------------------------------------------


def _pairs(r: int, s: int, offset: int = 0):
    """(y_j, z_l) slot pairs for variables ordered y_1..y_r, z_1..z_s after ``offset``."""
    return [(offset + j, offset + r + l) for j in range(r) for l in range(s)]


@dataclass(frozen=True)
class QTHyperplane:
    """``f(.., t y_j, .., c q z_l, ..) = f(.., y_j, .., c z_l, ..)`` along ``c y_j = z_l``.

    Variables are ``y_1..y_r, z_1..z_s``. With ``c = 1`` this is the plain
    multiplicative condition on the hyperplane ``y_j = z_l``.
    """

    q: Fraction
    t: Fraction
    r: int
    s: int
    c: Fraction = Fraction(1)
    homogeneous = True

    def __post_init__(self):
        for name in ("q", "t", "c"):
            object.__setattr__(self, name, _nonzero(name, getattr(self, name)))
        _positive("r", self.r)
        _positive("s", self.s)

    def images(self, f: Polynomial) -> list[Polynomial]:
        n = self.r + self.s
        out = []
        for j, l in _pairs(self.r, self.s):
            w = _var(n, j)
            moved = _identity(n)
            base = _identity(n)
            moved[j], moved[l] = w.scale(self.t), w.scale(self.c * self.q)
            base[j], base[l] = w, w.scale(self.c)
            out.append(substitute_affine(f, moved) - substitute_affine(f, base))
        return out


@dataclass(frozen=True)
class ClassicalHyperplane:
    """``((a d/dz_l - d/dy_j) f) = 0`` on ``y_j = z_l`` for all pairs."""

    a: Fraction
    r: int
    s: int
    homogeneous = True

    def __post_init__(self):
        object.__setattr__(self, "a", _nonzero("a", self.a))
        _positive("r", self.r)
        _positive("s", self.s)

    def images(self, f: Polynomial) -> list[Polynomial]:
        n = self.r + self.s
        out = []
        for j, l in _pairs(self.r, self.s):
            g = f.derivative(l).scale(self.a) - f.derivative(j)
            sub = _identity(n)
            sub[l] = _var(n, j)
            out.append(substitute_affine(g, sub))
        return out


@dataclass(frozen=True)
class SwapDivisibility:
    """``f - f|_{y_j <-> y_k}`` divisible by ``(y_j - y_k)**order`` for pairs in ``block``."""

    order: int
    block: tuple[int, ...]
    homogeneous = True

    def __post_init__(self):
        _positive("order", self.order)
        object.__setattr__(self, "block", tuple(self.block))

    def images(self, f: Polynomial) -> list[Polynomial]:
        out = []
        for j, k in itertools.combinations(self.block, 2):
            anti = f - f.swap(j, k)
            if anti.is_zero():
                continue
            out.extend(direction_expansion(anti, (j, k), self.order - 1))
        return out


@dataclass(frozen=True)
class TrigShiftHyperplane:
    """``f(.., y_j + 1, .., z_l - m, ..) = f`` on ``y_j = z_l``."""

    m: int
    r: int
    s: int
    homogeneous = False

    def __post_init__(self):
        _positive("m", self.m)
        _positive("r", self.r)
        _positive("s", self.s)

    def images(self, f: Polynomial) -> list[Polynomial]:
        n = self.r + self.s
        out = []
        for j, l in _pairs(self.r, self.s):
            w = _var(n, j)
            moved = _identity(n)
            base = _identity(n)
            moved[j], moved[l] = w + 1, w - self.m
            base[j], base[l] = w, w
            out.append(substitute_affine(f, moved) - substitute_affine(f, base))
        return out


@dataclass(frozen=True)
class TrigSwapDivisibility:
    """``f - f|_{y_j <-> y_k}`` divisible by ``prod_{p=-m..m} (y_j - y_k - p)``.

    Compiled as vanishing of the antisymmetrization on each hyperplane
    ``y_j = y_k + p``; the factors are pairwise coprime.
    """

    m: int
    block: tuple[int, ...]
    homogeneous = False

    def __post_init__(self):
        _positive("m", self.m)
        object.__setattr__(self, "block", tuple(self.block))

    def images(self, f: Polynomial) -> list[Polynomial]:
        n = f.nvars
        out = []
        for j, k in itertools.combinations(self.block, 2):
            anti = f - f.swap(j, k)
            if anti.is_zero():
                continue
            for p in range(-self.m, self.m + 1):
                sub = _identity(n)
                sub[j] = _var(n, k) + p
                out.append(substitute_affine(anti, sub))
        return out


# -- type (1,r,s) ---------------------------------------------------------------


def _type1rs_slots(r: int, s: int):
    x = 0
    ys = list(range(1, r + 1))
    zs = list(range(r + 1, r + s + 1))
    return x, ys, zs


@dataclass(frozen=True)
class Type1RS_QT:
    """The four conditions cutting out ``A_{r,s,q,t}`` in ``C[x, y, z]^{S_r x S_s}``.

    Only the representative pair ``(y_r, z_s)`` is compiled; the others follow
    from the symmetry.
    """

    q: Fraction
    t: Fraction
    r: int
    s: int
    homogeneous = True

    def __post_init__(self):
        object.__setattr__(self, "q", _nonzero("q", self.q))
        object.__setattr__(self, "t", _nonzero("t", self.t))
        _positive("r", self.r)
        _positive("s", self.s)

    def images(self, f: Polynomial) -> list[Polynomial]:
        q, t = self.q, self.t
        n = 1 + self.r + self.s
        x, ys, zs = _type1rs_slots(self.r, self.s)
        yr, zs_ = ys[-1], zs[-1]
        X = _var(n, x)
        U = _var(n, yr)  # the fresh variable u lives in the y_r slot

        def at(changes: dict[int, Polynomial]) -> Polynomial:
            sub = _identity(n)
            for slot, img in changes.items():
                sub[slot] = img
            return substitute_affine(f, sub)

        c1 = at({yr: U, zs_: U}) - at({x: U, yr: X, zs_: X})
        c2 = at({yr: U, zs_: U}) - at({yr: U.scale(t), zs_: U.scale(q)})
        c3 = at({yr: X.scale(t / q)}) - at({x: X.scale(1 / q), yr: X})
        c4 = at({zs_: X.scale(q / t)}) - at({x: X.scale(1 / t), zs_: X})
        return [c1, c2, c3, c4]


@dataclass(frozen=True)
class Type1RS_Classical:
    """Infinitesimal versions of the ``Type1RS_QT`` conditions for parameter ``a``."""

    a: Fraction
    r: int
    s: int
    homogeneous = True

    def __post_init__(self):
        object.__setattr__(self, "a", _nonzero("a", self.a))
        _positive("r", self.r)
        _positive("s", self.s)

    def images(self, f: Polynomial) -> list[Polynomial]:
        a = self.a
        n = 1 + self.r + self.s
        x, ys, zs = _type1rs_slots(self.r, self.s)
        yr, zl = ys[-1], zs[-1]
        X = _var(n, x)
        U = _var(n, yr)

        def at(g: Polynomial, changes: dict[int, Polynomial]) -> Polynomial:
            sub = _identity(n)
            for slot, img in changes.items():
                sub[slot] = img
            return substitute_affine(g, sub)

        c1 = at(f, {yr: U, zl: U}) - at(f, {x: U, yr: X, zl: X})
        c2 = at(f.derivative(yr) - f.derivative(zl).scale(a), {yr: U, zl: U})
        c3 = at(f.derivative(yr).scale(a + 1) - f.derivative(x).scale(a), {yr: X})
        c4 = at(f.derivative(zl).scale(a + 1) - f.derivative(x), {zl: X})
        return [c1, c2, c3, c4]


# -- A_1 difference example -----------------------------------------------------


@dataclass(frozen=True)
class A1EvenPoints:
    """``f(j) = f(-j)`` for ``j = 1..m`` on one-variable polynomials."""

    m: int
    homogeneous = False

    def __post_init__(self):
        _positive("m", self.m)

    def images(self, f: Polynomial) -> list[Polynomial]:
        if f.nvars != 1:
            raise ConditionError("A1EvenPoints acts on one-variable polynomials")
        return [Polynomial.constant(1, f.evaluate([j]) - f.evaluate([-j])) for j in range(1, self.m + 1)]


ConditionSpec = Union[
    MultiplicativeLine,
    InfinitesimalLine,
    QTHyperplane,
    ClassicalHyperplane,
    SwapDivisibility,
    TrigShiftHyperplane,
    TrigSwapDivisibility,
    Type1RS_QT,
    Type1RS_Classical,
    A1EvenPoints,
]


@dataclass(frozen=True)
class SymmetrySpec:
    """Variable blocks inside which polynomials are required to be symmetric."""

    nvars: int
    blocks: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        flat = [i for b in self.blocks for i in b]
        if len(flat) != len(set(flat)) or any(not 0 <= i < self.nvars for i in flat):
            raise ConditionError(f"invalid symmetry blocks {self.blocks}")

    def coordinates(self) -> SymmetricCoordinates:
        return _coords(self.nvars, self.blocks)


_COORDS: dict = {}


def _coords(nvars, blocks) -> SymmetricCoordinates:
    key = (nvars, blocks)
    if key not in _COORDS:
        _COORDS[key] = SymmetricCoordinates(nvars, blocks)
    return _COORDS[key]


@dataclass
class LinearSystem:
    """Conditions compiled on the orbit-sum basis of a (filtered) symmetric space.

    ``columns[i]`` is the image of the ``i``-th orbit sum, keyed by
    ``(condition, residual, monomial)``; each key is one linear functional.
    """

    sym: SymmetrySpec
    basis: list[tuple[int, tuple[int, ...]]]
    columns: list[dict[tuple, Fraction]]
    filtered: bool
    _rank: int | None = field(default=None, repr=False)

    @property
    def functionals(self) -> list[dict[int, Fraction]]:
        rows: dict[tuple, dict[int, Fraction]] = {}
        for i, col in enumerate(self.columns):
            for key, c in col.items():
                rows.setdefault(key, {})[i] = c
        return [rows[k] for k in sorted(rows, key=repr)]

    @property
    def rank(self) -> int:
        if self._rank is None:
            keys: dict[tuple, int] = {}
            vecs = []
            for col in self.columns:
                vecs.append({keys.setdefault(k, len(keys)): c for k, c in col.items()})
            eb = EchelonBasis(len(keys))
            eb.extend(vecs)
            self._rank = eb.rank
        return self._rank

    def solution_dimension(self) -> int:
        return len(self.basis) - self.rank

    def solution_basis(self) -> list[Polynomial]:
        coords = self.sym.coordinates()
        out = []
        for vec in nullspace(self.columns):
            terms: dict = {}
            for i, c in vec.items():
                _, mono = self.basis[i]
                for mm in coords.orbit(mono):
                    terms[mm] = c
            out.append(Polynomial(self.sym.nvars, terms))
        return out


def _images_vector(conds: Sequence[ConditionSpec], f: Polynomial) -> dict[tuple, Fraction]:
    out = {}
    for ci, cond in enumerate(conds):
        for ri, img in enumerate(cond.images(f)):
            for m, c in img.terms.items():
                out[(ci, ri, m)] = c
    return out


def compile(conds: Sequence[ConditionSpec], sym: SymmetrySpec, d: int) -> LinearSystem:  # noqa: A001
    """Linear system on symmetric polynomials of degree ``d``.

    Homogeneous condition sets act on the degree-``d`` piece; if any
    condition is non-homogeneous the space is all degrees ``<= d``.
    """
    if d < 0:
        raise ConditionError("negative degree")
    conds = tuple(conds)
    filtered = any(not c.homogeneous for c in conds)
    coords = sym.coordinates()
    degrees = range(d + 1) if filtered else [d]
    basis = [(e, m) for e in degrees for m in coords.monomials(e)]
    columns = [_images_vector(conds, coords.orbit_sum(m)) for _, m in basis]
    return LinearSystem(sym, basis, columns, filtered)


def solution_dimension(conds: Sequence[ConditionSpec], sym: SymmetrySpec, d: int) -> int:
    return compile(conds, sym, d).solution_dimension()


def solution_dims(conds: Sequence[ConditionSpec], sym: SymmetrySpec, D: int) -> list[int]:
    return [solution_dimension(conds, sym, d) for d in range(D + 1)]


def check_satisfies(f: Polynomial, conds: Sequence[ConditionSpec], sym: SymmetrySpec | None = None) -> bool:
    """True iff ``f`` has the required symmetry and passes every condition."""
    if sym is not None and not sym.coordinates().is_symmetric(f):
        return False
    return all(img.is_zero() for cond in conds for img in cond.images(f))


def a1_mr_apply(f: Polynomial, m: int) -> Polynomial:
    """Rational A_1 Macdonald-Ruijsenaars operator.

    ``((x - m)(f(x+1) - f(x)) + (x + m)(f(x-1) - f(x))) / x``
    """
    if f.nvars != 1:
        raise ConditionError("a1_mr_apply acts on one-variable polynomials")
    _positive("m", m)
    x = _var(1, 0)
    fwd = substitute_affine(f, [x + 1]) - f
    bwd = substitute_affine(f, [x - 1]) - f
    num = (x - m) * fwd + (x + m) * bwd
    if num.constant_term():
        raise NonPolynomialResult(f"numerator has constant term {num.constant_term()}, not divisible by x")
    return Polynomial(1, {(e - 1,): c for (e,), c in num.terms.items()})
