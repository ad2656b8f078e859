"""Integer partitions as weakly decreasing tuples, plus Young-diagram statistics."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{parts} is not a partition")
    return p


def _gen(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse lexicographic order (``(n)`` first)."""
    if n < 0:
        raise ValueError("negative size")
    return tuple(_gen(n, n))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def cells(p: Partition) -> Iterator[tuple[int, int]]:
    """Boxes ``(row, column)``, both 0-based."""
    for i, row in enumerate(p):
        for j in range(row):
            yield i, j


def content(cell: tuple[int, int]) -> int:
    i, j = cell
    return j - i


def kappa(p: Partition) -> int:
    """Sum of contents ``column - row`` over all boxes."""
    return sum(j - i for i, j in cells(p))


def hooks_and_legs(p: Partition) -> list[tuple[int, int]]:
    """``(hook length, leg length)`` for every box."""
    pc = conjugate(p)
    out = []
    for i, j in cells(p):
        arm = p[i] - j - 1
        leg = pc[j] - i - 1
        out.append((arm + leg + 1, leg))
    return out


def addable_cells(p: Partition) -> list[tuple[int, int]]:
    out = []
    for i in range(len(p) + 1):
        row = p[i] if i < len(p) else 0
        above = p[i - 1] if i > 0 else None
        if above is None or row < above:
            out.append((i, row))
    return out


def add_cell(p: Partition, cell: tuple[int, int]) -> Partition:
    i, _ = cell
    q = list(p) + [0]
    q[i] += 1
    return tuple(x for x in q if x)


def multiplicities(p: Partition) -> Counter:
    return Counter(p)


def z_value(p: Partition) -> int:
    """Centralizer order ``prod_i i**m_i * m_i!`` of the class of cycle type ``p``."""
    return prod(k**m * factorial(m) for k, m in Counter(p).items())


def class_size(p: Partition) -> int:
    return factorial(sum(p)) // z_value(p)


def dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def scale(p: Partition, m: int) -> Partition:
    return tuple(m * x for x in p)


def factorial_product(p: Partition) -> int:
    """``p! = p_1! p_2! ...``"""
    return prod(factorial(x) for x in p)
