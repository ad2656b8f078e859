"""Coordinate rings of the subspace arrangements ``X_lambda``.

``X_lambda`` in ``C^N`` (``N = |lambda|``) is the union of the subspaces on
which the coordinates split into groups of sizes ``lambda_1, lambda_2, ...``
with equal values inside each group. A polynomial restricts to a tuple of
polynomials in the group coordinates, one per component; the coordinate
ring is the image of that restriction, computed degree by degree.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .exactmath import EchelonBasis, ModularSpan, OneMinus, Power, Product, RowSpan, expand_series
from .genalg import CmVerdict, GradedDims, freeness_test
from .symfun.partitions import Partition, check_partition, multiplicities, partitions

Vector = dict[int, Fraction]


class ArrangementError(RuntimeError):
    """Generic linear forms kept failing to cut the arrangement down to a point."""


@dataclass(frozen=True)
class Arrangement:
    """Components of ``X_lambda``; ``assignments[c][i]`` is the group of coordinate ``i``."""

    shape: Partition
    assignments: tuple[tuple[int, ...], ...]

    @property
    def ambient_dim(self) -> int:
        return sum(self.shape)

    @property
    def length(self) -> int:
        return len(self.shape)

    def __len__(self):
        return len(self.assignments)


def expected_component_count(lam: Partition) -> int:
    lam = check_partition(lam)
    mult = multiplicities(lam)
    return factorial(sum(lam)) // (prod(factorial(p) for p in lam) * prod(factorial(k) for k in mult.values()))


def _set_partitions(free: tuple[int, ...], sizes: tuple[int, ...]):
    """Split ``free`` into blocks of the multiset ``sizes``; blocks ordered by least element."""
    if not free:
        yield ()
        return
    first, rest = free[0], free[1:]
    for size in sorted(set(sizes), reverse=True):
        remaining = list(sizes)
        remaining.remove(size)
        for others in itertools.combinations(rest, size - 1):
            block = (first,) + others
            left = tuple(i for i in rest if i not in others)
            for tail in _set_partitions(left, tuple(remaining)):
                yield (block,) + tail


@lru_cache(maxsize=None)
def components(lam: Partition) -> Arrangement:
    """Enumerate the components of ``X_lambda`` once each."""
    lam = check_partition(lam)
    n = sum(lam)
    out = []
    for blocks in _set_partitions(tuple(range(n)), lam):
        assign = [0] * n
        for b, block in enumerate(blocks):
            for i in block:
                assign[i] = b
        out.append(tuple(assign))
    out.sort()
    return Arrangement(lam, tuple(out))


# -- graded restriction maps -------------------------------------------------------------
#
# Every component contains the diagonal line, so X_lambda = line x Y where Y is the image of
# X_lambda under y_i = x_i - x_N (i < N). On a component, y_i restricts to the group coordinate
# of coordinate i relative to the group of coordinate N, which is zero on that group. Hence
# O(X) = O(Y)[s] with s = x_N, and all rank computations run on Y with one fewer variable on
# both sides.


def _monomials(nvars: int, d: int) -> list[tuple[int, ...]]:
    if nvars == 0:
        return [()] if d == 0 else []
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials(nvars - 1, d - first):
            out.append((first,) + rest)
    return out


class _Layout:
    """Column indexing of ``direct sum over components of C[w]_d``.

    ``targets[c][i]`` is the group coordinate that variable ``i`` restricts to on
    component ``c``, or ``-1`` when it restricts to zero.
    """

    def __init__(self, arr: Arrangement, reduced: bool = True):
        self.arr = arr
        self.reduced = reduced
        if reduced:
            self.nvars = max(arr.ambient_dim - 1, 0)
            self.width = arr.length - 1
            self.targets = []
            for assign in arr.assignments:
                last = assign[-1]
                shift = [b if b < last else b - 1 for b in range(arr.length)]
                self.targets.append(tuple(-1 if assign[i] == last else shift[assign[i]] for i in range(self.nvars)))
        else:
            self.nvars = arr.ambient_dim
            self.width = arr.length
            self.targets = list(arr.assignments)
        self._index: dict[int, dict[tuple[int, tuple[int, ...]], int]] = {}
        self._keys: dict[int, list[tuple[int, tuple[int, ...]]]] = {}

    def index(self, d: int) -> dict[tuple[int, tuple[int, ...]], int]:
        if d not in self._index:
            monos = _monomials(self.width, d)
            self._index[d] = {
                (c, m): i
                for i, (c, m) in enumerate((c, m) for c in range(len(self.arr)) for m in monos)
            }
            self._keys[d] = list(self._index[d])
        return self._index[d]

    def size(self, d: int) -> int:
        return len(self.index(d))

    def restrict_monomial(self, expo: tuple[int, ...], d: int) -> Vector:
        idx = self.index(d)
        out: Vector = {}
        for c, target in enumerate(self.targets):
            w = [0] * self.width
            for i, e in enumerate(expo):
                if e:
                    if target[i] < 0:
                        break
                    w[target[i]] += e
            else:
                col = idx[(c, tuple(w))]
                out[col] = out.get(col, 0) + 1
        return out

    def linear_form(self, coeffs) -> list[tuple[int, ...]]:
        """Restriction of ``sum coeffs[i] * var_i`` to each component, in group coordinates."""
        out = []
        for target in self.targets:
            w = [0] * self.width
            for i, a in enumerate(coeffs):
                if target[i] >= 0:
                    w[target[i]] += a
            out.append(tuple(w))
        return out

    def times_form(self, form: list[tuple[int, ...]], vec: Vector, d_from: int) -> Vector:
        """Multiply a degree-``d_from`` vector by a linear form given per component."""
        self.index(d_from)
        src = self._keys[d_from]
        dst = self.index(d_from + 1)
        out: dict[int, Fraction] = {}
        for i, coeff in vec.items():
            c, m = src[i]
            for b, a in enumerate(form[c]):
                if a:
                    w = list(m)
                    w[b] += 1
                    col = dst[(c, tuple(w))]
                    out[col] = out.get(col, 0) + a * coeff
        return {k: v for k, v in out.items() if v}


def _cumulative(values) -> GradedDims:
    return GradedDims(tuple(itertools.accumulate(values)))


class CoordinateRing:
    """Graded pieces of ``O(Y)``, from which ``O(X_lambda) = O(Y)[s]`` follows.

    Degree ``d`` is represented by standard monomials: a set of ``y``-monomials
    whose restrictions form a basis of ``O(Y)_d``.
    """

    def __init__(self, lam: Partition):
        self.arrangement = components(lam)
        self.layout = _Layout(self.arrangement)
        self._standard: list[list[tuple[int, ...]]] = []

    def standard_monomials(self, d: int) -> list[tuple[int, ...]]:
        while len(self._standard) <= d:
            self._extend()
        return self._standard[d]

    def _successors(self, d: int) -> list[tuple[int, ...]]:
        """Monomials ``y_i * m`` for standard ``m`` of degree ``d - 1``; they span degree ``d``."""
        out = set()
        for m in self._standard[d - 1]:
            for i in range(self.layout.nvars):
                out.add(m[:i] + (m[i] + 1,) + m[i + 1 :])
        return sorted(out, reverse=True)

    def _extend(self) -> None:
        d = len(self._standard)
        if d == 0:
            self._standard.append([(0,) * self.layout.nvars])
            return
        span = RowSpan()
        self._standard.append([m for m in self._successors(d) if span.add(self.layout.restrict_monomial(m, d))])

    def reduced_dims(self, D: int) -> GradedDims:
        """Graded dimensions of ``O(Y)``."""
        return GradedDims(tuple(len(self.standard_monomials(d)) for d in range(D + 1)))

    def dims(self, D: int) -> GradedDims:
        return _cumulative(self.reduced_dims(D))

    def _reduced_quotient(self, forms, D: int, modular: bool) -> list[int]:
        forms = [[(i, Fraction(c)) for i, c in enumerate(f) if c] for f in forms]
        out = []
        for d in range(D + 1):
            if out and out[-1] == 0:
                # the quotient is generated in degree 1
                out.append(0)
                continue
            span = ModularSpan() if modular else RowSpan()
            if d > 0:
                for m in self.standard_monomials(d - 1):
                    for form in forms:
                        v: dict[int, Fraction] = {}
                        for i, c in form:
                            up = m[:i] + (m[i] + 1,) + m[i + 1 :]
                            for col, x in self.layout.restrict_monomial(up, d).items():
                                v[col] = v.get(col, 0) + c * x
                        span.add(v)
            out.append(len(self.standard_monomials(d)) - span.rank)
        return out

    def quotient_dims(self, forms, D: int, modular: bool = False) -> GradedDims:
        """Graded dimensions of ``O(X) / (forms)`` for ambient linear forms on ``C^N``.

        With ``x_i = y_i + s`` and ``x_N = s`` a form is ``alpha * s + L'(y)``;
        one form with ``alpha != 0`` eliminates ``s`` and the rest become forms on ``Y``.
        With ``modular=True`` the span of the ideal is ranked modulo a prime, which
        can only overstate the quotient dimensions.
        """
        n = self.arrangement.ambient_dim
        split = [(sum(Fraction(a) for a in f), [Fraction(a) for a in f[: n - 1]]) for f in forms]
        pivot = next((j for j, (alpha, _) in enumerate(split) if alpha), None)
        if pivot is None:
            return _cumulative(self._reduced_quotient([rest for _, rest in split], D, modular))
        alpha_p, rest_p = split[pivot]
        reduced = [
            [a - alpha / alpha_p * b for a, b in zip(rest, rest_p)]
            for j, (alpha, rest) in enumerate(split)
            if j != pivot
        ]
        return GradedDims(tuple(self._reduced_quotient(reduced, D, modular)))


def hilbert_function(lam: Partition, D: int) -> GradedDims:
    """``dim O(X_lambda)_d`` for ``d <= D``."""
    return CoordinateRing(lam).dims(D)


def monomial_rank(lam: Partition, d: int) -> int:
    """Rank of the restriction of all degree-``d`` monomials in ``x`` (slow reference route)."""
    layout = _Layout(components(lam), reduced=False)
    basis = EchelonBasis(layout.size(d))
    for m in _monomials(sum(lam), d):
        basis.add(layout.restrict_monomial(m, d))
    return basis.rank


# -- CM test ----------------------------------------------------------------------------


@dataclass(frozen=True)
class ArrangementTest:
    shape: Partition
    verdict: CmVerdict
    dims: GradedDims
    quotient: GradedDims
    forms: tuple[tuple[int, ...], ...]
    attempts: int


def window_capacity(lam: Partition, D: int) -> int:
    """Largest possible length of ``O(X) / (l generic forms)`` if it vanishes in degree ``D``.

    The quotient is a quotient of a polynomial ring in ``N - l`` variables, and
    its length is at least the degree of ``X`` (the number of components), with
    equality exactly in the CM case. A window with smaller capacity can never
    certify a system of parameters.
    """
    k = sum(lam) - len(lam)
    return comb(D - 1 + k, k) if D >= 1 else 0


def cm_test_report(lam: Partition, D: int, seed: int = 0, retries: int = 3) -> ArrangementTest:
    """Freeness over ``l(lambda)`` seeded random linear forms with coefficients in ``[-9, 9]``.

    A verdict needs the quotient to vanish in degree ``D``, which certifies
    that the forms are a system of parameters; otherwise the forms are
    redrawn, and after ``retries`` attempts an ``ArrangementError`` is raised.

    The quotient is first ranked modulo a prime. That can only overstate it,
    while ``h_X <= h_quot / (1 - u)**l`` holds for any linear forms, so a
    modular result that vanishes at ``D`` and satisfies the identity is exact.
    Anything else is recomputed over the integers.
    """
    lam = check_partition(lam)
    n, ell = sum(lam), len(lam)
    capacity, degree = window_capacity(lam, D), len(components(lam))
    if capacity < degree:
        raise ArrangementError(
            f"X_{lam} has degree {degree} but a quotient vanishing at {D} has length at most {capacity}; raise D"
        )
    ring = CoordinateRing(lam)
    rng = random.Random(seed)
    dims = ring.dims(D)
    for attempt in range(1, retries + 1):
        forms = tuple(tuple(rng.randint(-9, 9) for _ in range(n)) for _ in range(ell))
        quot = ring.quotient_dims(forms, D, modular=True)
        if quot[D] == 0:
            verdict = freeness_test(dims, quot, [1] * ell, D)
            if not verdict.consistent:
                quot = ring.quotient_dims(forms, D)
                verdict = freeness_test(dims, quot, [1] * ell, D)
            return ArrangementTest(lam, verdict, dims, quot, forms, attempt)
    raise ArrangementError(f"quotient of X_{lam} does not vanish by degree {D} after {retries} draws; raise D")


def cm_test(lam: Partition, D: int, seed: int = 0) -> CmVerdict:
    return cm_test_report(lam, D, seed).verdict


# -- merging two groups -------------------------------------------------------------------


@dataclass(frozen=True)
class MergeKernel:
    dims: GradedDims
    predicted: tuple[int, ...]
    source_dims: GradedDims
    target_dims: GradedDims

    @property
    def matches(self) -> bool:
        return tuple(self.dims) == self.predicted


def merge_kernel_dims(m: int, n: int, D: int) -> MergeKernel:
    """Kernel of ``O(X_{m^n}) -> O(X_{(2m, m^{n-2})})`` against the discriminant prediction.

    Both rings are quotients of ``C[x]`` with nested kernels, so the kernel
    dimension is the difference of restriction ranks; the joint rank is
    checked to equal the source rank to confirm the nesting.
    """
    if n < 3 or m < 1:
        raise ValueError("need n >= 3 and m >= 1")
    big = (m,) * n
    small = (2 * m,) + (m,) * (n - 2)
    src, tgt = hilbert_function(big, D), hilbert_function(small, D)
    layout_b, layout_s = _Layout(components(big), reduced=False), _Layout(components(small), reduced=False)
    for d in range(min(D, 3) + 1):
        joint = EchelonBasis(layout_b.size(d) + layout_s.size(d))
        off = layout_b.size(d)
        for mono in _monomials(m * n, d):
            v = dict(layout_b.restrict_monomial(mono, d))
            for k, c in layout_s.restrict_monomial(mono, d).items():
                v[off + k] = c
            joint.add(v)
        if joint.rank != src[d]:
            raise AssertionError("restriction kernels are not nested")
    kernel = GradedDims(tuple(a - b for a, b in zip(src, tgt)))
    count = len(components(big))
    series = expand_series(Product((Power(n * (n - 1) // 2), OneMinus(1, -n))), D).int_coefficients(D)
    predicted = tuple(count * c for c in series)
    return MergeKernel(kernel, predicted, src, tgt)


# -- conjecture ------------------------------------------------------------------------------


def conjecture_family(lam: Partition) -> int | None:
    """Which conjectured CM family ``lam`` belongs to (1, 2 or 3), or ``None``."""
    lam = check_partition(lam)
    big = lam[0]
    ones = sum(1 for p in lam if p == 1)
    if all(p in (big, 1) for p in lam):
        if big == 1 or big > ones:
            return 1
        if big == 2:
            return 2
    if len(lam) >= 1 and big % 2 == 0 and all(p == big // 2 for p in lam[1:]):
        return 3
    return None


def conjecture_classifier(lam: Partition) -> bool:
    return conjecture_family(lam) is not None


@dataclass(frozen=True)
class ScanRow:
    shape: Partition
    predicted_cm: bool
    outcome: str  # "consistent_cm", "refuted" or "inconclusive"
    first_deviation: int | None


def conjecture_scan(n_max: int = 6, D: int = 10, seed: int = 0) -> list[ScanRow]:
    """Run ``cm_test`` on every partition of size ``<= n_max``.

    The rows are evidence only: refutations are exact, consistency is up to ``D``.
    """
    rows = []
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            cls = conjecture_classifier(lam)
            try:
                verdict = cm_test(lam, D, seed)
            except ArrangementError:
                rows.append(ScanRow(lam, cls, "inconclusive", None))
                continue
            rows.append(ScanRow(lam, cls, verdict.label, None if verdict.consistent else verdict.degree))
    return rows
