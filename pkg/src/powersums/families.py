"""Algebras generated by generalized power sums and their CM diagnosis.

Each family is described by a small frozen dataclass. ``generators`` builds
the generating polynomials, ``condition_specs`` the quasi-invariance
conditions expected to cut out the same algebra, and ``predicted_hilbert``
the closed-form Hilbert series. ``cm_diagnose`` runs all three routes.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from . import conditions as cond
from .exactmath import (
    GradedSeries,
    OneMinus,
    Polynomial,
    Power,
    Product,
    Sum,
    expand_series,
    qpoch,
    rational,
)
from .genalg import (
    CmVerdict,
    GeneratorSet,
    GradedAlgebra,
    GradedDims,
    freeness_test,
    quotient_dims,
    restriction_kernel_dims,
)

log = logging.getLogger(__name__)


class InadmissibleSpec(ValueError):
    """Parameters fall in an excluded (degenerate) locus."""

    def __init__(self, rule: str):
        super().__init__(rule)
        self.rule = rule


class GenericityWarning(RuntimeError):
    """Two independently sampled generic parameters gave different answers."""


# -- parameter sources ------------------------------------------------------------


@dataclass(frozen=True)
class ExplicitSeq:
    """A literal coefficient sequence ``a_1, a_2, ...``."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(rational(v) for v in self.values))
        if not self.values:
            raise ValueError("empty coefficient sequence")


@dataclass(frozen=True)
class CQT:
    """``a_i = c**i (q**i - 1) / (1 - t**i)``."""

    c: Fraction
    q: Fraction
    t: Fraction

    def __post_init__(self):
        for name in ("c", "q", "t"):
            object.__setattr__(self, name, rational(getattr(self, name)))


@dataclass(frozen=True)
class ConstA:
    """``a_i = c**i a``."""

    c: Fraction
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", rational(self.c))
        object.__setattr__(self, "a", rational(self.a))


@dataclass(frozen=True)
class Classical:
    """Constant coefficient ``a_i = a``."""

    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rational(self.a))


@dataclass(frozen=True)
class QT:
    """``a_i = c**i (q**i - 1) / (1 - t**i)``; ``c`` must be 1 for type (1,r,s)."""

    q: Fraction
    t: Fraction
    c: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("c", "q", "t"):
            object.__setattr__(self, name, rational(getattr(self, name)))


# -- families -----------------------------------------------------------------------


@dataclass(frozen=True)
class Type11:
    """``Q_i = a_i y**i + z**i`` in ``C[y, z]``."""

    source: Union[ExplicitSeq, CQT, ConstA]


@dataclass(frozen=True)
class TypeRS:
    """``Q_i = a_i (y_1**i + .. + y_r**i) + z_1**i + .. + z_s**i``."""

    r: int
    s: int
    source: Union[Classical, QT]


@dataclass(frozen=True)
class Type1RS:
    """``P_i = b_i x**i + a_i sum y**i + sum z**i`` in ``C[x, y, z]``, with ``b_i = a_i + 1`` classically."""

    r: int
    s: int
    source: Union[Classical, QT]


@dataclass(frozen=True)
class MQuasi:
    """m-quasi-invariants with ``r`` heavy and ``s`` light variables."""

    r: int
    s: int
    m: int


@dataclass(frozen=True)
class MQuasiTrig:
    """Trigonometric (filtered) m-quasi-invariants."""

    r: int
    s: int
    m: int


FamilySpec = Union[Type11, TypeRS, Type1RS, MQuasi, MQuasiTrig]


def qt_coefficient(c: Fraction, q: Fraction, t: Fraction, i: int) -> Fraction:
    return c**i * (q**i - 1) / (1 - t**i)


def coefficient(spec: FamilySpec, i: int) -> Fraction:
    """The weight ``a_i`` of the heavy variables in the ``i``-th generator."""
    if i < 1:
        raise ValueError("generator index starts at 1")
    src = getattr(spec, "source", None)
    if isinstance(src, ExplicitSeq):
        if i > len(src.values):
            raise ValueError(f"explicit sequence has only {len(src.values)} terms, a_{i} requested")
        return src.values[i - 1]
    if isinstance(src, CQT):
        return qt_coefficient(src.c, src.q, src.t, i)
    if isinstance(src, QT):
        return qt_coefficient(src.c, src.q, src.t, i)
    if isinstance(src, ConstA):
        return src.c**i * src.a
    if isinstance(src, Classical):
        return src.a
    raise TypeError(f"{type(spec).__name__} has no coefficient sequence")


# -- layout -------------------------------------------------------------------------


def nvars(spec: FamilySpec) -> int:
    if isinstance(spec, Type11):
        return 2
    if isinstance(spec, Type1RS):
        return 1 + spec.r + spec.s
    return spec.r + spec.s


def blocks(spec: FamilySpec) -> tuple[tuple[int, ...], ...]:
    """Symmetry blocks; m-quasi-invariants are symmetric in the light variables only."""
    if isinstance(spec, Type11):
        return ()
    if isinstance(spec, TypeRS):
        return (tuple(range(spec.r)), tuple(range(spec.r, spec.r + spec.s)))
    if isinstance(spec, Type1RS):
        return (tuple(range(1, spec.r + 1)), tuple(range(spec.r + 1, spec.r + spec.s + 1)))
    return (tuple(range(spec.r, spec.r + spec.s)),)


def parameter_count(spec: FamilySpec) -> int:
    """Number of leading generators used as the parameter subalgebra."""
    return nvars(spec)


# -- admissibility ------------------------------------------------------------------


@dataclass(frozen=True)
class Admissibility:
    verdict: bool
    rule: str | None = None

    def __bool__(self):
        return self.verdict


def _ok() -> Admissibility:
    return Admissibility(True)


def _bad(rule: str) -> Admissibility:
    return Admissibility(False, rule)


def _is_root_of_unity(x: Fraction, depth: int) -> bool:
    # the only rational roots of unity are 1 and -1
    return x == 1 or (x == -1 and depth >= 2)


def _qt_rules(q: Fraction, t: Fraction, c: Fraction, r: int, s: int, depth: int) -> Admissibility:
    if c == 0 or q == 0 or t == 0:
        return _bad("c, q, t must be nonzero")
    for name, x in (("q", q), ("t", t)):
        if _is_root_of_unity(x, max(depth, 2)):
            return _bad(f"{name} is a root of unity")
    if q == t:
        return _bad("q = t")
    if q * t == 1:
        return _bad("q t = 1")
    for m in range(1, r + 2):
        for n in range(1, s + 2):
            if q**m == t**n:
                return _bad(f"q^{m} = t^{n}")
            if q**m * t**n == 1:
                return _bad(f"q^{m} = t^-{n}")
    return _ok()


def _classical_rules(a: Fraction, r: int, s: int) -> Admissibility:
    if a == 0:
        return _bad("a must be nonzero")
    for m in range(1, r + 2):
        for n in range(1, s + 2):
            if a == Fraction(-n, m):
                return _bad(f"a = -{n}/{m}")
            if a == Fraction(n, m):
                return _bad(f"a = {n}/{m}")
    return _ok()


def _sequence_rules(a1: Fraction, a2: Fraction, a3: Fraction | None) -> Admissibility:
    if a2 == -a1 * a1:
        return _bad("a2 = -a1^2")
    if a3 is not None and a2 == a1 * a1 and a3 == a1**3:
        return _bad("(a2, a3) = (a1^2, a1^3)")
    return _ok()


def admissible(spec: FamilySpec, depth: int = 12) -> Admissibility:
    """Screen ``spec`` against the degenerate parameter loci.

    Rational ``q, t`` can only be the roots of unity 1 and -1, so ``depth``
    matters only through that. The ``q**m = t**(+-n)`` screen uses
    ``1 <= m <= r+1``, ``1 <= n <= s+1`` and is deliberately wider than the
    proven exceptional set.
    """
    if isinstance(spec, (MQuasi, MQuasiTrig)):
        if spec.r < 1 or spec.s < 1 or spec.m < 1:
            return _bad("r, s, m must be positive")
        if spec.m <= spec.s:
            return _bad("m <= s")
        return _ok()
    if isinstance(spec, Type11):
        src = spec.source
        if isinstance(src, ExplicitSeq):
            vals = src.values
            if any(v == 0 for v in vals):
                return _bad("a_i must be nonzero")
            if len(vals) < 2:
                return _bad("need at least a1, a2")
            return _sequence_rules(vals[0], vals[1], vals[2] if len(vals) > 2 else None)
        if isinstance(src, CQT):
            res = _qt_rules(src.q, src.t, src.c, 1, 1, depth)
            if not res:
                return res
        elif isinstance(src, ConstA):
            if src.c == 0 or src.a == 0:
                return _bad("c, a must be nonzero")
            if src.a in (1, -1):
                return _bad(f"a = {src.a}")
        else:
            raise TypeError(f"bad source for Type11: {src!r}")
        return _sequence_rules(coefficient(spec, 1), coefficient(spec, 2), coefficient(spec, 3))
    if isinstance(spec, (TypeRS, Type1RS)):
        if spec.r < 1 or spec.s < 1:
            return _bad("r, s must be positive")
        # type (1,r,s) sits inside type (r+1, s+1)
        r, s = (spec.r + 1, spec.s + 1) if isinstance(spec, Type1RS) else (spec.r, spec.s)
        src = spec.source
        if isinstance(src, QT):
            if isinstance(spec, Type1RS) and src.c != 1:
                return _bad("type (1,r,s) requires c = 1")
            return _qt_rules(src.q, src.t, src.c, r, s, depth)
        if isinstance(src, Classical):
            return _classical_rules(src.a, r, s)
        raise TypeError(f"bad source for {type(spec).__name__}: {src!r}")
    raise TypeError(f"unknown family {spec!r}")


def require_admissible(spec: FamilySpec, depth: int = 12) -> None:
    res = admissible(spec, depth)
    if not res:
        raise InadmissibleSpec(res.rule)


# -- generators -----------------------------------------------------------------------


def _generator(spec: FamilySpec, i: int) -> Polynomial:
    n = nvars(spec)
    if isinstance(spec, Type11):
        return Polynomial.monomial((i, 0), coefficient(spec, i)) + Polynomial.monomial((0, i))
    if isinstance(spec, TypeRS):
        ys, zs = blocks(spec)
        return Polynomial.power_sum(n, ys, i, coefficient(spec, i)) + Polynomial.power_sum(n, zs, i)
    if isinstance(spec, Type1RS):
        ys, zs = blocks(spec)
        src = spec.source
        if isinstance(src, QT):
            q, t = src.q, src.t
            cx = (q**i - t**i) / (1 - t**i)
            a = (q**i - 1) / (1 - t**i)
        else:
            a = src.a
            cx = a + 1
        return (
            Polynomial.power_sum(n, [0], i, cx)
            + Polynomial.power_sum(n, ys, i, a)
            + Polynomial.power_sum(n, zs, i)
        )
    raise InadmissibleSpec(f"{type(spec).__name__} is defined by conditions, not generators")


def generators(spec: FamilySpec, D: int, check: bool = True) -> GeneratorSet:
    """Generators of degrees ``1..D`` with exact parameter values."""
    if D < 1:
        raise ValueError("D must be at least 1")
    if isinstance(spec, (MQuasi, MQuasiTrig)):
        raise InadmissibleSpec(f"{type(spec).__name__} is defined by conditions, not generators")
    if check:
        require_admissible(spec, D)
    gens = tuple(_generator(spec, i) for i in range(1, D + 1))
    names = tuple(("Q" if not isinstance(spec, Type1RS) else "P") + str(i) for i in range(1, D + 1))
    return GeneratorSet(gens, nvars(spec), blocks(spec), names)


def variable_names(spec: FamilySpec) -> list[str]:
    if isinstance(spec, Type11):
        return ["y", "z"]
    r, s = spec.r, spec.s
    names = [f"y{j}" for j in range(1, r + 1)] + [f"z{l}" for l in range(1, s + 1)]
    return ["x"] + names if isinstance(spec, Type1RS) else names


# -- predicted series -------------------------------------------------------------------


def h_rs_expr(r: int, s: int):
    """``1/(u;u)_r * sum_{i<=s} u**(i(r+1)) / (u;u)_i``."""
    terms = tuple(Product((Power(i * (r + 1)), qpoch(i, -1))) for i in range(s + 1))
    return Product((qpoch(r, -1), Sum(terms)))


def predicted_hilbert(spec: FamilySpec, D: int) -> GradedSeries:
    require_admissible(spec, D)
    if isinstance(spec, Type11):
        expr = Product((Sum((Power(0), Power(3))), OneMinus(1, -1), OneMinus(2, -1)))
        return expand_series(expr, D)
    if isinstance(spec, TypeRS):
        return expand_series(h_rs_expr(spec.r, spec.s), D)
    if isinstance(spec, Type1RS):
        r1, s1 = spec.r + 1, spec.s + 1
        ideal = Product((Power(2 * r1 * s1), qpoch(r1, -1), qpoch(s1, -1)))
        return expand_series(h_rs_expr(r1, s1), D) - expand_series(ideal, D)
    from .symfun import hilbert_P

    return hilbert_P(spec.r, spec.s, spec.m, D)


# -- conditions route ----------------------------------------------------------------------


def condition_specs(spec: FamilySpec) -> list:
    """Quasi-invariance conditions expected to cut out the algebra of ``spec``."""
    if isinstance(spec, Type11):
        src = spec.source
        if isinstance(src, CQT):
            return [cond.MultiplicativeLine(src.q, src.t, src.c)]
        if isinstance(src, ConstA):
            return [cond.InfinitesimalLine(src.a, src.c)]
        vals = src.values
        if len(vals) >= 3:
            sols = solve_cqt(*vals[:3]).solutions
            if sols:
                c, q, t = sols[0]
                return [cond.MultiplicativeLine(q, t, c)]
        return []
    if isinstance(spec, TypeRS):
        src = spec.source
        if isinstance(src, QT):
            return [cond.QTHyperplane(src.q, src.t, spec.r, spec.s, src.c)]
        return [cond.ClassicalHyperplane(src.a, spec.r, spec.s)]
    if isinstance(spec, Type1RS):
        src = spec.source
        if isinstance(src, QT):
            return [cond.Type1RS_QT(src.q, src.t, spec.r, spec.s)]
        return [cond.Type1RS_Classical(src.a, spec.r, spec.s)]
    heavy = tuple(range(spec.r))
    if isinstance(spec, MQuasi):
        conds = [cond.ClassicalHyperplane(spec.m, spec.r, spec.s)]
        if spec.r > 1:
            conds.append(cond.SwapDivisibility(2 * spec.m + 1, heavy))
        return conds
    conds = [cond.TrigShiftHyperplane(spec.m, spec.r, spec.s)]
    if spec.r > 1:
        conds.append(cond.TrigSwapDivisibility(spec.m, heavy))
    return conds


def symmetry(spec: FamilySpec) -> cond.SymmetrySpec:
    return cond.SymmetrySpec(nvars(spec), blocks(spec))


def condition_dims(spec: FamilySpec, D: int) -> GradedDims | None:
    """Dimensions of the solution spaces; filtered (degree ``<= d``) for the trigonometric case."""
    conds = condition_specs(spec)
    if not conds:
        return None
    return GradedDims(tuple(cond.solution_dims(conds, symmetry(spec), D)))


def mquasi_power_sums(spec: Union[MQuasi, MQuasiTrig], D: int) -> list[Polynomial]:
    """``Q_i = m sum y**i + sum z**i``, members of the m-quasi-invariants."""
    n = spec.r + spec.s
    heavy, light = range(spec.r), range(spec.r, n)
    return [
        Polynomial.power_sum(n, heavy, i, spec.m) + Polynomial.power_sum(n, light, i) for i in range(1, D + 1)
    ]


# -- (c, q, t) inverse problem ---------------------------------------------------------------


@dataclass(frozen=True)
class CqtSolution:
    """Rational solutions and a note on what happened to the others.

    ``indicator`` is ``"rational"`` when the quadratic has rational roots,
    ``"irrational"`` when it has none, and ``"degenerate"`` when elimination
    collapses (no valid solution at all).
    """

    solutions: tuple[tuple[Fraction, Fraction, Fraction], ...]
    indicator: str


def _rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def solve_cqt(a1, a2, a3) -> CqtSolution:
    """All rational ``(c, q, t)`` with ``a_i = c**i (q**i - 1)/(1 - t**i)`` for ``i = 1, 2, 3``.

    With ``u = (q+1)/(q-1)`` and ``v = (1+t)/(1-t)`` the ratios
    ``a2/a1**2 = u/v`` and ``a3/a1**3 = (3u**2+1)/(3v**2+1)`` reduce the
    system to one quadratic in ``v``; its two roots ``+-v`` are exchanged by
    ``(c,q,t) -> (c q/t, 1/q, 1/t)``.
    """
    a1, a2, a3 = (rational(a) for a in (a1, a2, a3))
    if 0 in (a1, a2, a3):
        raise ValueError("a1, a2, a3 must be nonzero")
    R2 = a2 / a1**2
    R3 = a3 / a1**3
    if R3 == R2 * R2 or R3 == 1:
        return CqtSolution((), "degenerate")
    v2 = (1 - R3) / (3 * (R3 - R2 * R2))
    if v2 <= 0:
        return CqtSolution((), "degenerate" if v2 == 0 else "irrational")
    v = _rational_sqrt(v2)
    if v is None:
        return CqtSolution((), "irrational")
    out = []
    for vv in (v, -v):
        u = R2 * vv
        if u in (1, -1) or vv in (1, -1):
            continue
        q = (u + 1) / (u - 1)
        t = (vv - 1) / (vv + 1)
        c = a1 * (1 - t) / (q - 1)
        if all(qt_coefficient(c, q, t, i) == a for i, a in ((1, a1), (2, a2), (3, a3))):
            out.append((c, q, t))
    out.sort()
    return CqtSolution(tuple(out), "rational" if out else "degenerate")


# -- generic parameters ---------------------------------------------------------------------


def _small_rational(rng: random.Random, bound: int = 7) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x != 0:
            return x


def sample_generic_qt(r: int, s: int, seed: int, depth: int = 12, type1rs: bool = False) -> QT:
    """Seeded ``(q, t)`` with numerators and denominators at most 7, screened admissible."""
    rng = random.Random(seed)
    cls = Type1RS if type1rs else TypeRS
    while True:
        src = QT(_small_rational(rng), _small_rational(rng))
        if admissible(cls(r, s, src), depth):
            return src


def sample_generic_cqt(seed: int, depth: int = 12) -> CQT:
    rng = random.Random(seed)
    while True:
        src = CQT(1, _small_rational(rng), _small_rational(rng))
        if admissible(Type11(src), depth):
            return src


# -- diagnosis -----------------------------------------------------------------------------


@dataclass
class Diagnosis:
    spec: FamilySpec
    max_degree: int
    computed: GradedDims
    predicted: GradedSeries
    condition_dims: GradedDims | None
    quotient: GradedDims | None
    verdict: CmVerdict
    first_deviation: int | None
    notes: list[str] = field(default_factory=list)

    def predicted_list(self) -> list[int]:
        return self.predicted.int_coefficients(self.max_degree)


def _first_mismatch(a: Sequence[int], b: Sequence[int]) -> int | None:
    for d, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return d
    return None


def _solution_rows(spec: FamilySpec, D: int):
    sym = symmetry(spec)
    coords = sym.coordinates()
    conds = condition_specs(spec)
    rows = []
    for d in range(D + 1):
        system = cond.compile(conds, sym, d)
        rows.append([coords.to_vector(f, d) for f in system.solution_basis()])
    return coords, rows


def cm_diagnose(spec: FamilySpec, D: int) -> Diagnosis:
    """Generators, conditions and closed form side by side, plus a freeness test.

    The verdict is the first failure among the freeness identity over the
    leading generators and agreement with the predicted Hilbert series.
    """
    require_admissible(spec, D)
    predicted = predicted_hilbert(spec, D)
    pred = predicted.int_coefficients(D)
    notes: list[str] = []

    if isinstance(spec, MQuasiTrig):
        filtered = condition_dims(spec, D)
        graded = [filtered[0]] + [filtered[d] - filtered[d - 1] for d in range(1, D + 1)]
        computed = GradedDims(tuple(graded))
        dev = _first_mismatch(computed, pred)
        verdict = (
            CmVerdict.consistent_cm(D)
            if dev is None
            else CmVerdict.refuted_at(dev, pred[dev], computed[dev], "associated graded series")
        )
        notes.append("computed = associated graded of the filtered solution spaces")
        return Diagnosis(spec, D, computed, predicted, filtered, None, verdict, dev, notes)

    k = parameter_count(spec)
    if isinstance(spec, MQuasi):
        coords, rows = _solution_rows(spec, D)
        computed = GradedDims(tuple(len(r) for r in rows))
        cdims = computed
        params = mquasi_power_sums(spec, k)
        quot = quotient_dims(lambda d: rows[d], coords, params, D)
        degrees = [p.degree() for p in params]
        notes.append("computed by the conditions route; parameters m*p_i(y) + p_i(z)")
    else:
        gens = generators(spec, D)
        alg = GradedAlgebra(gens)
        computed = alg.dims(D)
        cdims = condition_dims(spec, D)
        params = list(gens.prefix(k))
        quot = quotient_dims(alg.rows, alg.coords, params, D)
        degrees = [p.degree() for p in params]
        if cdims is None:
            notes.append("no (c,q,t) interpolates a1..a3 rationally; conditions route skipped")

    verdict = freeness_test(computed, quot, degrees, D)
    dev = _first_mismatch(computed, pred)
    if cdims is not None:
        dc = _first_mismatch(computed, cdims)
        if dc is not None:
            notes.append(f"generator and condition routes differ first at degree {dc}")
            dev = dc if dev is None else min(dev, dc)
    series_dev = _first_mismatch(computed, pred)
    if series_dev is not None and (verdict.consistent or series_dev < verdict.degree):
        verdict = CmVerdict.refuted_at(series_dev, pred[series_dev], computed[series_dev], "hilbert series")
    return Diagnosis(spec, D, computed, predicted, cdims, quot, verdict, dev, notes)


def cm_diagnose_generic(r: int, s: int, D: int, seeds: Sequence[int] = (0, 1), type1rs: bool = False) -> Diagnosis:
    """Diagnose at seeded generic ``(q, t)``; the two seeds must agree."""
    results = []
    for seed in seeds:
        src = sample_generic_qt(r, s, seed, D, type1rs)
        spec = (Type1RS if type1rs else TypeRS)(r, s, src)
        results.append(cm_diagnose(spec, D))
    first = results[0]
    for other in results[1:]:
        if tuple(other.computed) != tuple(first.computed):
            raise GenericityWarning(
                f"seeds disagree: {tuple(first.computed)} vs {tuple(other.computed)}; parameters may be special"
            )
    return first


# -- discriminant-type polynomials and restriction ----------------------------------------------


def d_polynomial_b(r: int, s: int, b) -> Polynomial:
    """``prod_{j<=r+1, l<=s+1} (y_j - z_l)(y_j - b z_l)`` in ``C[y_1..y_{r+1}, z_1..z_{s+1}]``."""
    if r < 0 or s < 0:
        raise ValueError("r, s must be nonnegative")
    b = rational(b)
    n = r + s + 2
    out = Polynomial.constant(n, 1)
    for j in range(r + 1):
        y = Polynomial.variable(n, j)
        for l in range(s + 1):
            z = Polynomial.variable(n, r + 1 + l)
            out = out * (y - z) * (y - z.scale(b))
    return out


def d_polynomial(r: int, s: int) -> Polynomial:
    """``prod (y_j - z_l)**2``, the generator of the restriction kernel."""
    return d_polynomial_b(r, s, 1)


def restriction_map(r: int, s: int) -> list[Polynomial]:
    """Images of ``y_1..y_{r+1}, z_1..z_{s+1}`` under ``y_{r+1} = z_{s+1} = x``.

    The target has variables ``x, y_1..y_r, z_1..z_s``.
    """
    n = 1 + r + s
    x = Polynomial.variable(n, 0)
    ys = [Polynomial.variable(n, 1 + j) for j in range(r)] + [x]
    zs = [Polynomial.variable(n, 1 + r + l) for l in range(s)] + [x]
    return ys + zs


def restrict_to_type1rs(spec: TypeRS, D: int) -> GeneratorSet:
    """Restrict the generators of type ``(r+1, s+1)`` to ``y_{r+1} = z_{s+1}``."""
    if not isinstance(spec, TypeRS) or spec.r < 2 or spec.s < 2:
        raise ValueError("need a TypeRS spec with r, s >= 2")
    src = spec.source
    if isinstance(src, QT) and src.c != 1:
        raise InadmissibleSpec("restriction needs c = 1")
    gens = generators(spec, D)
    r, s = spec.r - 1, spec.s - 1
    target = Type1RS(r, s, src)
    return gens.substituted(restriction_map(r, s), blocks(target))


def restriction_kernel(spec: TypeRS, D: int) -> GradedDims:
    """Graded dimensions of the kernel of restriction to ``y_{r} = z_{s}``."""
    gens = generators(spec, D)
    return restriction_kernel_dims(gens, restriction_map(spec.r - 1, spec.s - 1), D)


def kernel_lower_bound(spec: TypeRS, D: int) -> list[int]:
    """Series of ``D_b * (symmetric polynomials)`` with ``b = t/q`` (or 1 classically)."""
    src = spec.source
    b = src.t / src.q if isinstance(src, QT) else Fraction(1)
    p = d_polynomial_b(spec.r - 1, spec.s - 1, b)
    e = p.degree()
    expr = Product((Power(e), qpoch(spec.r, -1), qpoch(spec.s, -1)))
    return expand_series(expr, D).int_coefficients(D)
