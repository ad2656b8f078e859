"""Graded subalgebras generated by homogeneous polynomials.

Everything is computed degree by degree with exact linear algebra. Elements
of block-symmetric algebras are stored by their coefficients on canonical
monomials (exponents sorted within each symmetry block), which determine a
block-symmetric polynomial uniquely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .exactmath import EchelonBasis, GradedSeries, Polynomial, is_block_symmetric, substitute_affine
from .exactmath.polynomial import Monomial

Vector = dict[int, Fraction]
DEFAULT_MAX_DEGREE = 12


@dataclass(frozen=True)
class GradedDims:
    """Dimensions ``dim_0 .. dim_D`` of a graded vector space."""

    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, d):
        return self.dims[d]

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __len__(self) -> int:
        return len(self.dims)

    def series(self) -> GradedSeries:
        return GradedSeries.from_coefficients(self.dims)

    def cumulative(self) -> "GradedDims":
        return GradedDims(tuple(itertools.accumulate(self.dims)))


@dataclass(frozen=True)
class CmVerdict:
    """Outcome of a truncated Cohen-Macaulayness test.

    ``consistent`` means no contradiction up to ``degree``; otherwise
    ``degree`` is the first degree where ``expected != computed``.
    """

    consistent: bool
    degree: int
    expected: int | None = None
    computed: int | None = None
    reason: str = "freeness"

    def __post_init__(self):
        if not self.consistent and (self.expected is None or self.expected == self.computed):
            raise ValueError("a refutation needs unequal expected and computed coefficients")

    @classmethod
    def consistent_cm(cls, D: int) -> "CmVerdict":
        return cls(True, D)

    @classmethod
    def refuted_at(cls, d: int, expected: int, computed: int, reason: str = "freeness") -> "CmVerdict":
        return cls(False, d, expected, computed, reason)

    @property
    def label(self) -> str:
        return "consistent_cm" if self.consistent else "refuted"

    def __str__(self):
        if self.consistent:
            return f"ConsistentCM({self.degree})"
        return f"RefutedAt({self.degree}; expected {self.expected}, computed {self.computed}; {self.reason})"


# -- symmetric coordinates -----------------------------------------------------


def _partitions_bounded(total: int, parts: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of length ``parts`` with sum ``total``."""
    if largest is None:
        largest = total
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions_bounded(total - first, parts - 1, first):
            yield (first,) + rest


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class SymmetricCoordinates:
    """Coordinates on block-symmetric polynomials of a fixed degree.

    ``blocks`` lists groups of variables permuted among themselves;
    variables not listed form singleton blocks.
    """

    def __init__(self, nvars: int, blocks: Sequence[Sequence[int]] = ()):
        seen: set[int] = set()
        clean = []
        for b in blocks:
            b = tuple(sorted(b))
            if any(i in seen or not 0 <= i < nvars for i in b):
                raise ValueError(f"blocks {blocks} overlap or leave the ambient space")
            seen.update(b)
            if b:
                clean.append(b)
        clean += [(i,) for i in range(nvars) if i not in seen]
        self.nvars = nvars
        self.blocks: tuple[tuple[int, ...], ...] = tuple(sorted(clean))
        self._mono_cache: dict[int, list[Monomial]] = {}
        self._index_cache: dict[int, dict[Monomial, int]] = {}
        self._orbit_cache: dict[Monomial, tuple[Monomial, ...]] = {}

    @property
    def symmetry_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def canon(self, m: Sequence[int]) -> Monomial:
        out = list(m)
        for b in self.blocks:
            if len(b) > 1:
                vals = sorted((m[i] for i in b), reverse=True)
                for i, v in zip(b, vals):
                    out[i] = v
        return tuple(out)

    def monomials(self, d: int) -> list[Monomial]:
        """Canonical monomials of degree ``d`` in decreasing lex order."""
        if d not in self._mono_cache:
            out = []
            for split in _compositions(d, len(self.blocks)):
                choices = [list(_partitions_bounded(k, len(b))) for k, b in zip(split, self.blocks)]
                for combo in itertools.product(*choices):
                    m = [0] * self.nvars
                    for b, vals in zip(self.blocks, combo):
                        for i, v in zip(b, vals):
                            m[i] = v
                    out.append(tuple(m))
            out.sort(reverse=True)
            self._mono_cache[d] = out
            self._index_cache[d] = {m: i for i, m in enumerate(out)}
        return self._mono_cache[d]

    def size(self, d: int) -> int:
        return len(self.monomials(d))

    def index(self, d: int) -> dict[Monomial, int]:
        self.monomials(d)
        return self._index_cache[d]

    def orbit(self, m: Monomial) -> tuple[Monomial, ...]:
        if m not in self._orbit_cache:
            pieces = []
            for b in self.blocks:
                vals = [m[i] for i in b]
                pieces.append(sorted(set(itertools.permutations(vals))))
            out = []
            for combo in itertools.product(*pieces):
                mm = [0] * self.nvars
                for b, vals in zip(self.blocks, combo):
                    for i, v in zip(b, vals):
                        mm[i] = v
                out.append(tuple(mm))
            self._orbit_cache[m] = tuple(out)
        return self._orbit_cache[m]

    def orbit_sum(self, m: Monomial) -> Polynomial:
        one = Fraction(1)
        return Polynomial._raw(self.nvars, {mm: one for mm in self.orbit(m)})

    def is_symmetric(self, p: Polynomial) -> bool:
        return is_block_symmetric(p, self.symmetry_blocks)

    def to_vector(self, p: Polynomial, d: int | None = None) -> Vector:
        """Coordinates of a homogeneous block-symmetric polynomial."""
        if p.is_zero():
            return {}
        if d is None:
            d = p.degree()
        idx = self.index(d)
        out: Vector = {}
        for m, c in p.terms.items():
            i = idx.get(m)
            if i is not None:
                out[i] = c
            elif sum(m) != d:
                raise ValueError(f"term {m} is not of degree {d}")
        return out

    def to_polynomial(self, v: Vector, d: int) -> Polynomial:
        monos = self.monomials(d)
        terms: dict[Monomial, Fraction] = {}
        for i, c in v.items():
            if c:
                for mm in self.orbit(monos[i]):
                    terms[mm] = c
        return Polynomial._raw(self.nvars, terms)

    def multiply(self, g: Polynomial, v: Vector, d_from: int) -> Vector:
        """Coordinates of ``g * f`` where ``f`` has coordinates ``v`` in degree ``d_from``.

        ``g`` must be homogeneous and block-symmetric.
        """
        if not v or g.is_zero():
            return {}
        dg = g.degree()
        d_to = d_from + dg
        src = self.monomials(d_from)
        coeff_at = {src[i]: c for i, c in v.items()}
        canon = self.canon
        out: Vector = {}
        g_terms = list(g.terms.items())
        for j, target in enumerate(self.monomials(d_to)):
            acc = 0
            for t, c in g_terms:
                diff = tuple(a - b for a, b in zip(target, t))
                if min(diff) < 0:
                    continue
                f = coeff_at.get(canon(diff))
                if f:
                    acc += c * f
            if acc:
                out[j] = acc
        return out


# -- generator sets ------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    """Nonzero homogeneous generators sharing one ambient space and symmetry."""

    gens: tuple[Polynomial, ...]
    nvars: int
    blocks: tuple[tuple[int, ...], ...] = ()
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        for g in self.gens:
            if g.nvars != self.nvars:
                raise ValueError("generator lives in the wrong ambient space")
            if g.is_zero() or not g.is_homogeneous():
                raise ValueError(f"generators must be nonzero and homogeneous: {g}")
            if self.blocks and not is_block_symmetric(g, self.blocks):
                raise ValueError(f"generator {g} lacks the declared block symmetry")

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.degree() for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def truncated(self, D: int) -> "GeneratorSet":
        return GeneratorSet(tuple(g for g in self.gens if g.degree() <= D), self.nvars, self.blocks, self.names)

    def prefix(self, k: int) -> "GeneratorSet":
        return GeneratorSet(self.gens[:k], self.nvars, self.blocks, self.names)

    def substituted(self, assignment: Sequence[Polynomial], blocks: Sequence[Sequence[int]] = ()) -> "GeneratorSet":
        images = tuple(substitute_affine(g, assignment) for g in self.gens)
        target = assignment[0].nvars
        return GeneratorSet(tuple(g for g in images if not g.is_zero()), target, tuple(tuple(b) for b in blocks))


class GradedAlgebra:
    """Degree-wise echelon bases of a graded subalgebra.

    The degree-``d`` piece is spanned by ``g_i * b`` for generators ``g_i`` and
    echelon rows ``b`` of the degree ``d - deg g_i`` piece.
    """

    def __init__(self, gens: GeneratorSet):
        self.gens = gens
        self.coords = SymmetricCoordinates(gens.nvars, gens.blocks)
        self._bases: list[EchelonBasis] = []

    def basis(self, d: int) -> EchelonBasis:
        while len(self._bases) <= d:
            self._extend()
        return self._bases[d]

    def _extend(self) -> None:
        d = len(self._bases)
        coords = self.coords
        basis = EchelonBasis(coords.size(d))
        if d == 0:
            basis.add({0: 1})
        else:
            for g in self.gens:
                e = g.degree()
                if 0 < e <= d:
                    for row in self._bases[d - e].rows:
                        basis.add(coords.multiply(g, row, d - e))
        self._bases.append(basis)

    def rows(self, d: int) -> list[Vector]:
        return self.basis(d).rows

    def dims(self, D: int) -> GradedDims:
        return GradedDims(tuple(self.basis(d).rank for d in range(D + 1)))

    def polynomials(self, d: int) -> list[Polynomial]:
        return [self.coords.to_polynomial(r, d) for r in self.rows(d)]


def graded_dimensions(gens: GeneratorSet, D: int) -> GradedDims:
    """Dimensions of the degree ``0..D`` pieces of the algebra generated by ``gens``."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    return GradedAlgebra(gens.truncated(D)).dims(D)


def membership(f: Polynomial, gens: GeneratorSet, algebra: GradedAlgebra | None = None) -> bool:
    """Does the homogeneous polynomial ``f`` lie in the algebra generated by ``gens``?"""
    if f.is_zero():
        return True
    if not f.is_homogeneous():
        raise ValueError("membership needs a homogeneous polynomial")
    if f.nvars != gens.nvars:
        raise ValueError("ambient mismatch")
    d = f.degree()
    alg = algebra or GradedAlgebra(gens.truncated(d))
    if not alg.coords.is_symmetric(f):
        return False
    return alg.basis(d).contains(alg.coords.to_vector(f, d))


def quotient_dims(
    rows: Callable[[int], list[Vector]],
    coords: SymmetricCoordinates,
    ideal_gens: Sequence[Polynomial],
    D: int,
) -> GradedDims:
    """``dim A_d / sum_j q_j A_{d - deg q_j}`` for an algebra given by its graded bases."""
    out = []
    for d in range(D + 1):
        full = rows(d)
        span = EchelonBasis(coords.size(d))
        for q in ideal_gens:
            e = q.degree()
            if 0 <= e <= d:
                for row in rows(d - e):
                    span.add(coords.multiply(q, row, d - e))
        out.append(len(full) - span.rank)
    return GradedDims(tuple(out))


def quotient_by_ideal_dims(gens: GeneratorSet, ideal_gens: Sequence[Polynomial], D: int) -> GradedDims:
    """Graded dimensions of ``A / (ideal_gens) A`` where ``A`` is generated by ``gens``."""
    alg = GradedAlgebra(gens.truncated(D))
    for q in ideal_gens:
        if q.is_zero() or not q.is_homogeneous():
            raise ValueError("ideal generators must be nonzero and homogeneous")
        if not membership(q, gens, alg):
            raise ValueError(f"ideal generator {q} is not in the algebra")
    return quotient_dims(alg.rows, alg.coords, ideal_gens, D)


def freeness_series(quot: GradedDims, parameter_degrees: Sequence[int], D: int) -> list[int]:
    s = quot.series().truncate(D)
    for e in parameter_degrees:
        s = s.divide_one_minus(e)
    return s.int_coefficients(D)


def freeness_test(alg: GradedDims, quot: GradedDims, parameter_degrees: Sequence[int], D: int) -> CmVerdict:
    """Check ``h_alg = h_quot / prod(1 - u**e)`` coefficientwise up to ``D``."""
    if len(alg) <= D or len(quot) <= D:
        raise ValueError("dimension lists are shorter than the window")
    expected = freeness_series(quot, parameter_degrees, D)
    for d in range(D + 1):
        if expected[d] != alg[d]:
            return CmVerdict.refuted_at(d, expected[d], alg[d])
    return CmVerdict.consistent_cm(D)


def restriction_kernel_dims(gens: GeneratorSet, substitution: Sequence[Polynomial], D: int) -> GradedDims:
    """Dimensions of ``{f in A_d : f(substitution) = 0}`` for ``d <= D``."""
    alg = GradedAlgebra(gens.truncated(D))
    out = []
    for d in range(D + 1):
        images: dict[Monomial, int] = {}
        vecs = []
        for f in alg.polynomials(d):
            img = substitute_affine(f, substitution)
            vec = {}
            for m, c in img.terms.items():
                vec[images.setdefault(m, len(images))] = c
            vecs.append(vec)
        span = EchelonBasis(len(images))
        span.extend(vecs)
        out.append(len(vecs) - span.rank)
    return GradedDims(tuple(out))
