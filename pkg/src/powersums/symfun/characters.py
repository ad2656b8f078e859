"""Symmetric group characters, Kostka matrices and plethysm coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import (
    Partition,
    add_cell,
    addable_cells,
    check_partition,
    class_size,
    content,
    partitions,
    scale,
    z_value,
)


def _beta(lam: Partition, length: int) -> tuple[int, ...]:
    lam = lam + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return tuple(x for x in (beta[i] - (n - 1 - i) for i in range(n)) if x)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    length = len(lam)
    beta = _beta(lam, length)
    occupied = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in occupied:
            continue
        # rim hook of length k; height = beads strictly between nb and b
        height = sum(1 for x in beta if nb < x < b)
        new = [x for x in beta if x != b] + [nb]
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """``chi^lam`` on the class of cycle type ``mu`` (Murnaghan-Nakayama rule)."""
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    return _mn(lam, tuple(sorted(mu, reverse=True)))


def dim(lam: Partition) -> int:
    """Dimension of the irreducible representation, as ``chi^lam(identity)``."""
    return character(lam, (1,) * sum(lam))


class CharacterTable:
    """``values[i][j] = chi^{parts[i]}(C_{parts[j]})`` for all partitions of ``n``."""

    def __init__(self, n: int):
        self.n = n
        self.parts = partitions(n)
        self.class_sizes = [class_size(mu) for mu in self.parts]
        self.values = [[character(lam, mu) for mu in self.parts] for lam in self.parts]

    def inner(self, i: int, j: int) -> int:
        """``sum_mu |C_mu| chi^i(mu) chi^j(mu)``; equals ``n!`` on the diagonal, else 0."""
        return sum(c * a * b for c, a, b in zip(self.class_sizes, self.values[i], self.values[j]))


# -- Pieri and Kostka --------------------------------------------------------


@lru_cache(maxsize=None)
def pieri(mu: Partition, s: int) -> tuple[Partition, ...]:
    """Partitions ``nu`` with ``nu / mu`` a horizontal strip of size ``s``."""
    if s < 0:
        raise ValueError("negative strip size")
    mu = tuple(mu)
    rows = len(mu) + 1
    padded = mu + (0,)
    out = []

    def go(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        cap = left if i == 0 else min(left, padded[i - 1] - padded[i])
        for k in range(cap, -1, -1):
            go(i + 1, left - k, acc + [padded[i] + k])

    go(0, s, [])
    return tuple(sorted(set(out), reverse=True))


@lru_cache(maxsize=None)
def _ssyt_count(shape: Partition, content_: Partition) -> int:
    if not content_:
        return 1 if not shape else 0
    *head, last = content_
    total = 0
    # strip the boxes filled with the largest entry: a horizontal strip of size ``last``
    for inner in _inner_strips(shape, last):
        total += _ssyt_count(inner, tuple(head))
    return total


def _inner_strips(shape: Partition, s: int) -> list[Partition]:
    out = []
    n = len(shape)

    def go(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        below = shape[i + 1] if i + 1 < n else 0
        cap = min(left, shape[i] - below)
        for k in range(cap, -1, -1):
            go(i + 1, left - k, acc + [shape[i] - k])

    go(0, s, [])
    return out


def kostka(mu: Partition, lam: Partition) -> int:
    """Number of semistandard tableaux of shape ``mu`` and content ``lam``.

    This is the multiplicity of ``chi^mu`` in the permutation character
    induced from the Young subgroup ``S_lam``.
    """
    if sum(mu) != sum(lam):
        return 0
    return _ssyt_count(tuple(mu), tuple(lam))


class KostkaPair:
    """Kostka matrix ``K[mu][lam]`` and its inverse over ``partitions(n)``."""

    def __init__(self, n: int):
        self.n = n
        self.parts = partitions(n)
        self.index = {p: i for i, p in enumerate(self.parts)}
        size = len(self.parts)
        self.K = [[kostka(mu, lam) for lam in self.parts] for mu in self.parts]
        # upper unitriangular in reverse-lex order: solve K X = I by back substitution
        inv = [[0] * size for _ in range(size)]
        for col in range(size):
            for row in range(size - 1, -1, -1):
                acc = 1 if row == col else 0
                for k in range(row + 1, size):
                    if self.K[row][k]:
                        acc -= self.K[row][k] * inv[k][col]
                inv[row][col] = acc
        self.K_inv = inv

    def k(self, mu: Partition, lam: Partition) -> int:
        return self.K[self.index[mu]][self.index[lam]]

    def k_inv(self, mu: Partition, lam: Partition) -> int:
        return self.K_inv[self.index[mu]][self.index[lam]]


@lru_cache(maxsize=None)
def kostka_pair(n: int) -> KostkaPair:
    if n < 1:
        raise ValueError("n must be positive")
    return KostkaPair(n)


# -- plethysm ---------------------------------------------------------------------


class IntegralityError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def plethysm_c(lam: Partition, m: int) -> dict[Partition, int]:
    """Coefficients ``c^nu`` of ``s_lam(x_1^m, x_2^m, ...) = sum_nu c^nu s_nu``."""
    lam = check_partition(lam)
    if m < 1:
        raise ValueError("m must be positive")
    r = sum(lam)
    classes = partitions(r)
    weights = [(Fraction(character(lam, mu), z_value(mu)), scale(mu, m)) for mu in classes]
    out = {}
    for nu in partitions(m * r):
        total = sum(w * character(nu, mmu) for w, mmu in weights)
        if total.denominator != 1:
            raise IntegralityError(f"c^{nu}_{lam};{m} = {total} is not an integer")
        if total:
            out[nu] = int(total)
    return out


@lru_cache(maxsize=None)
def b_coeffs(lam: Partition, s: int, m: int) -> dict[Partition, int]:
    """Coefficients of ``s_lam(x^m) * s_(s)(x)``: ``b^nu = sum c^mu`` over horizontal ``s``-strips ``nu/mu``."""
    out: dict[Partition, int] = {}
    for mu, c in plethysm_c(lam, m).items():
        for nu in pieri(mu, s):
            out[nu] = out.get(nu, 0) + c
    return {nu: c for nu, c in out.items() if c}


def add_box_candidates(nu: Partition, m: int) -> list[Partition]:
    """Partitions obtained from ``nu`` by adding one box of content divisible by ``m``."""
    return [add_cell(nu, cell) for cell in addable_cells(nu) if content(cell) % m == 0]


def young_permutation_character(lam: Partition, mu: Partition) -> int:
    """Value of the character induced from the trivial one of ``S_lam`` on class ``mu``.

    Counts the ways to distribute the cycles of ``mu`` among rows of sizes ``lam``.
    """
    rows = list(lam)

    def go(i: int) -> int:
        if i == len(mu):
            return 1 if all(x == 0 for x in rows) else 0
        total = 0
        for j in range(len(rows)):
            if rows[j] >= mu[i]:
                rows[j] -= mu[i]
                total += go(i + 1)
                rows[j] += mu[i]
        return total

    return go(0)


def factorial_ratio(alpha: Partition) -> int:
    r = sum(alpha)
    out = factorial(r)
    for a in alpha:
        out //= factorial(a)
    return out
