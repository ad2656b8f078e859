"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: every value in this package is exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip().replace("−", "-"))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def grlex_key(m: Monomial) -> tuple:
    return (sum(m), m)


class Polynomial:
    """Polynomial in a fixed number of variables, stored as ``{exponents: coefficient}``.

    Instances are treated as immutable: arithmetic returns new objects and
    the term dictionary is never mutated after construction.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        if nvars < 0:
            raise ValueError("negative variable count")
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} does not have {nvars} exponents")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = rational(coeff)
            if c:
                c = clean.get(mono, 0) + c
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        # caller guarantees: tuples of the right length, no zero coefficients
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise IndexError(f"variable {index} outside 0..{nvars - 1}")
        mono = [0] * nvars
        mono[index] = 1
        return cls._raw(nvars, {tuple(mono): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def power_sum(cls, nvars: int, indices: Iterable[int], degree: int, coeff: Scalar = 1) -> "Polynomial":
        """``coeff * sum(x_j**degree for j in indices)``."""
        terms: dict[Monomial, Fraction] = {}
        c = rational(coeff)
        for j in indices:
            mono = [0] * nvars
            mono[j] = degree
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + c
        return cls(nvars, terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]), reverse=True)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"ambient mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = rational(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        return multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def derivative(self, index: int) -> "Polynomial":
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            e = m[index]
            if e:
                mm = m[:index] + (e - 1,) + m[index + 1:]
                out[mm] = out.get(mm, 0) + c * e
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable ``i`` to ``perm[i]``."""
        out: dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            mm = [0] * self.nvars
            for i, e in enumerate(m):
                mm[perm[i]] = e
            out[tuple(mm)] = c
        return Polynomial._raw(self.nvars, out)

    def swap(self, j: int, k: int) -> "Polynomial":
        perm = list(range(self.nvars))
        perm[j], perm[k] = k, j
        return self.permute(perm)

    def substitute(self, assignment: Sequence["Polynomial"]) -> "Polynomial":
        return substitute_affine(self, assignment)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong length")
        pt = [rational(v) for v in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(pt, m):
                if e:
                    term *= v**e
            total += term
        return total

    # -- display -----------------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names else [f"x{i}" for i in range(self.nvars)]
        pieces = []
        for m, c in self.sorted_terms():
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"Polynomial({self.nvars}, {self.to_string()})"


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact product of two polynomials over the same variables."""
    p._check(q)
    if len(p.terms) > len(q.terms):
        p, q = q, p
    out: dict[Monomial, Fraction] = {}
    get = out.get
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = get(m, 0) + c1 * c2
    return Polynomial._raw(p.nvars, {m: c for m, c in out.items() if c})


def substitute_affine(p: Polynomial, assignment: Sequence[Polynomial]) -> Polynomial:
    """Replace variable ``i`` of ``p`` by ``assignment[i]``.

    All images must live in one common target context. The contract is an
    affine substitution, but any polynomial images are accepted.
    """
    if len(assignment) != p.nvars:
        raise ValueError(f"assignment covers {len(assignment)} of {p.nvars} variables")
    if not assignment:
        return Polynomial.constant(0, p.constant_term())
    target = assignment[0].nvars
    if any(a.nvars != target for a in assignment):
        raise ValueError("assignment images live in different contexts")
    powers: list[list[Polynomial]] = [[Polynomial.constant(target, 1)] for _ in assignment]

    def power(i: int, e: int) -> Polynomial:
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * assignment[i])
        return cache[e]

    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        term = None
        for i, e in enumerate(m):
            if e:
                f = power(i, e)
                term = f if term is None else term * f
        if term is None:
            key = (0,) * target
            out[key] = out.get(key, 0) + c
            continue
        for mm, cc in term.terms.items():
            out[mm] = out.get(mm, 0) + c * cc
    return Polynomial._raw(target, {m: c for m, c in out.items() if c})


def linear_form(nvars: int, coeffs: Mapping[int, Scalar], constant: Scalar = 0) -> Polynomial:
    """``constant + sum(c * x_i)``; the building block of affine assignments."""
    terms: dict[Monomial, Scalar] = {(0,) * nvars: constant}
    for i, c in coeffs.items():
        mono = [0] * nvars
        mono[i] = 1
        terms[tuple(mono)] = c
    return Polynomial(nvars, terms)


def direction_expansion(p: Polynomial, var_pair: tuple[int, int], order: int) -> list[Polynomial]:
    """Taylor coefficients of ``p`` along ``y_j = w + eps, y_k = w``.

    Returns the coefficients of ``eps**0 .. eps**order``. The fresh variable
    ``w`` reuses slot ``k``; slot ``j`` is absent from every coefficient.
    Applied to ``p - swap(p)`` this decides divisibility by
    ``(y_j - y_k)**(order + 1)``.
    """
    j, k = var_pair
    n = p.nvars
    if j == k or not (0 <= j < n and 0 <= k < n):
        raise ValueError(f"bad variable pair {var_pair}")
    if order < 0:
        raise ValueError("negative order")
    ext = n + 1
    images = [Polynomial.variable(ext, i) for i in range(n)]
    images[j] = Polynomial.variable(ext, k) + Polynomial.variable(ext, n)
    moved = substitute_affine(p, images)
    coeffs: list[dict[Monomial, Fraction]] = [{} for _ in range(order + 1)]
    for m, c in moved.terms.items():
        e = m[n]
        if e <= order:
            coeffs[e][m[:n]] = c
    return [Polynomial._raw(n, t) for t in coeffs]


def is_block_symmetric(p: Polynomial, blocks: Sequence[Sequence[int]]) -> bool:
    """True when ``p`` is invariant under permutations inside each block."""
    for m, c in p.terms.items():
        for block in blocks:
            for a, b in zip(block, block[1:]):
                if m[a] != m[b]:
                    mm = list(m)
                    mm[a], mm[b] = mm[b], mm[a]
                    if p.terms.get(tuple(mm)) != c:
                        return False
    return True
