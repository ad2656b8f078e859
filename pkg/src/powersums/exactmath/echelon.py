"""Incremental reduced row echelon form over the rationals."""

from __future__ import annotations

import bisect
import heapq
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Vector = Union[Sequence, Mapping[int, Fraction]]


class EchelonBasis:
    """Reduced echelon basis of a growing span of coefficient vectors.

    Rows are sparse ``{column: Fraction}`` dicts. Pivot columns are kept in
    increasing order, each pivot entry is 1 and no other row has a nonzero
    entry in a pivot column.
    """

    def __init__(self, ncols: int):
        if ncols < 0:
            raise ValueError("negative column count")
        self.ncols = ncols
        self.pivots: list[int] = []
        self._rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> list[dict[int, Fraction]]:
        return [self._rows[p] for p in self.pivots]

    def copy(self) -> "EchelonBasis":
        other = EchelonBasis(self.ncols)
        other.pivots = list(self.pivots)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    def _sparse(self, v: Vector) -> dict[int, Fraction]:
        if isinstance(v, Mapping):
            out = {}
            for col, c in v.items():
                if not 0 <= col < self.ncols:
                    raise ValueError(f"column {col} outside 0..{self.ncols - 1}")
                if c:
                    out[col] = Fraction(c)
            return out
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} for a basis over {self.ncols} columns")
        return {i: Fraction(c) for i, c in enumerate(v) if c}

    def reduce(self, v: Vector) -> dict[int, Fraction]:
        """Remainder of ``v`` modulo the span (zero on every pivot column)."""
        w = self._sparse(v)
        rows = self._rows
        for p in [c for c in w if c in rows]:
            f = w.get(p)
            if not f:
                continue
            for col, c in rows[p].items():
                val = w.get(col, 0) - f * c
                if val:
                    w[col] = val
                else:
                    w.pop(col, None)
        return w

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)

    def add(self, v: Vector) -> bool:
        """Insert ``v`` in place; return True iff it was independent."""
        w = self.reduce(v)
        if not w:
            return False
        lead = min(w)
        inv = 1 / w[lead]
        w = {c: x * inv for c, x in w.items()}
        for row in self._rows.values():
            f = row.get(lead)
            if f:
                for col, c in w.items():
                    val = row.get(col, 0) - f * c
                    if val:
                        row[col] = val
                    else:
                        row.pop(col, None)
        self._rows[lead] = w
        bisect.insort(self.pivots, lead)
        return True

    def extend(self, vectors: Iterable[Vector]) -> int:
        """Insert many vectors; return how many were independent."""
        return sum(self.add(v) for v in vectors)

    def dense_rows(self) -> list[list[Fraction]]:
        out = []
        for r in self.rows:
            row = [Fraction(0)] * self.ncols
            for c, x in r.items():
                row[c] = x
            out.append(row)
        return out


class RowSpan:
    """Fraction-free row echelon form over the integers, for rank and membership only.

    Input vectors may carry rational entries; each is scaled to a primitive
    integer vector. Rows are never back-substituted, which keeps them short.
    """

    def __init__(self):
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @staticmethod
    def _integral(v: Mapping[int, Fraction]) -> dict[int, int]:
        den = 1
        for x in v.values():
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        return {c: int(x * den) for c, x in v.items() if x}

    def reduce(self, v: Mapping[int, Fraction]) -> dict[int, int]:
        """An integer multiple of the remainder of ``v`` (zero iff ``v`` is in the span)."""
        w = self._integral(v)
        rows = self._rows
        heap = [c for c in w if c in rows]
        heapq.heapify(heap)
        while heap:
            p = heapq.heappop(heap)
            f = w.get(p)
            if not f:
                continue
            row = rows[p]
            g = gcd(row[p], f)
            scale, mult = row[p] // g, f // g
            if scale != 1:
                for c in w:
                    w[c] *= scale
            for col, c in row.items():
                val = w.get(col, 0) - mult * c
                if val:
                    if col not in w and col in rows:
                        heapq.heappush(heap, col)
                    w[col] = val
                else:
                    w.pop(col, None)
            if scale != 1 and w:
                content = 0
                for x in w.values():
                    content = gcd(content, x)
                    if content == 1:
                        break
                if content > 1:
                    for c in w:
                        w[c] //= content
        return w

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)

    def add(self, v: Mapping[int, Fraction]) -> bool:
        """Insert ``v``; return True iff it was independent."""
        w = self.reduce(v)
        if not w:
            return False
        self._rows[min(w)] = w
        return True


MERSENNE_61 = (1 << 61) - 1


class ModularSpan:
    """Row echelon form modulo a prime, for rank only.

    Vectors are first scaled to integers, so the rank found here never
    exceeds the rank over the rationals.
    """

    def __init__(self, prime: int = MERSENNE_61):
        self.prime = prime
        self._rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, v: Mapping[int, Fraction]) -> dict[int, int]:
        p = self.prime
        w = {c: x % p for c, x in RowSpan._integral(v).items() if x % p}
        rows = self._rows
        heap = [c for c in w if c in rows]
        heapq.heapify(heap)
        while heap:
            col0 = heapq.heappop(heap)
            f = w.get(col0)
            if not f:
                continue
            for col, c in rows[col0].items():
                val = (w.get(col, 0) - f * c) % p
                if val:
                    if col not in w and col in rows:
                        heapq.heappush(heap, col)
                    w[col] = val
                else:
                    w.pop(col, None)
        return w

    def add(self, v: Mapping[int, Fraction]) -> bool:
        w = self.reduce(v)
        if not w:
            return False
        lead = min(w)
        inv = pow(w[lead], -1, self.prime)
        self._rows[lead] = {c: x * inv % self.prime for c, x in w.items()}
        return True


def echelon_insert(basis: EchelonBasis, v: Vector) -> tuple[EchelonBasis, bool]:
    """Persistent insert: the input basis is left untouched."""
    new = basis.copy()
    independent = new.add(v)
    return new, independent


def rank(vectors: Iterable[Vector], ncols: int) -> int:
    basis = EchelonBasis(ncols)
    basis.extend(vectors)
    return basis.rank


def nullspace(columns: Sequence[Mapping[int, Fraction]]) -> list[dict[int, Fraction]]:
    """Kernel of the linear map whose ``i``-th column image is ``columns[i]``.

    Returns a basis of ``{c : sum_i c_i * columns[i] = 0}`` as sparse vectors
    indexed by column position.
    """
    keys = sorted({k for col in columns for k in col})
    index = {k: i for i, k in enumerate(keys)}
    width = len(keys)
    n = len(columns)
    basis = EchelonBasis(width + n)
    for i, col in enumerate(columns):
        v = {index[k]: x for k, x in col.items() if x}
        v[width + i] = Fraction(1)
        basis.add(v)
    # rows whose pivot sits in the tag block have a zero image part
    kernel = []
    for p in basis.pivots:
        if p >= width:
            row = basis._rows[p]
            kernel.append({c - width: x for c, x in row.items()})
    return kernel
