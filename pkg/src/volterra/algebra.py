"""Genetic Volterra algebras given by structure constants.

An algebra on basis e_1..e_n is fixed by one rational weight per unordered
pair i < j: the coefficient of e_i in e_i * e_j.  The complementary weight
on e_j is one minus it, diagonal products satisfy e_i * e_i = e_i, and no
other basis vector ever appears in a product.  Those constraints are baked
into the representation, so the only axiom left to check at runtime is the
0 <= weight <= 1 range.

Indices are 1-based throughout the public API, matching the JSON format.
Vectors are plain tuples of Fraction (component k of the maths lives at
Python index k-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Q = Fraction

HALF = Q(1, 2)


def pair_index(n: int, i: int, j: int) -> int:
    """Position of pair (i, j), i < j, in lexicographic pair order."""
    assert 1 <= i < j <= n
    return (i - 1) * n - (i - 1) * i // 2 + (j - i - 1)


def all_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class AlgebraSpec:
    """Structure constants: weights[pair_index(n,i,j)] is the e_i weight in e_i * e_j."""

    dimension: int
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        n = self.dimension
        assert n >= 1
        assert len(self.weights) == n * (n - 1) // 2

    @staticmethod
    def from_pairs(dimension: int, values: dict[tuple[int, int], Fraction | int | str]) -> "AlgebraSpec":
        n = dimension
        expected = all_pairs(n)
        if set(values) != set(expected):
            missing = sorted(set(expected) - set(values))
            extra = sorted(set(values) - set(expected))
            raise ValueError(f"pair set mismatch: missing {missing}, extra {extra}")
        return AlgebraSpec(n, tuple(Q(values[p]) for p in expected))

    def pair_value(self, i: int, j: int) -> Fraction:
        """Weight of e_i in e_i * e_j for i < j."""
        return self.weights[pair_index(self.dimension, i, j)]

    def pairs(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        for p, v in zip(all_pairs(self.dimension), self.weights):
            yield p, v

    def p(self, i: int, j: int, k: int) -> Fraction:
        """Full structure tensor: weight of e_k in e_i * e_j."""
        if i == j:
            return Q(1) if k == i else Q(0)
        lo, hi = (i, j) if i < j else (j, i)
        v = self.pair_value(lo, hi)
        if k == lo:
            return v
        if k == hi:
            return 1 - v
        return Q(0)


def validate(spec: AlgebraSpec) -> list[str]:
    """Axiom violations as human-readable messages; empty means valid.

    Symmetry, normalization and the support restriction cannot be violated
    in this representation; the weight range can.
    """
    problems = []
    if spec.dimension < 1:
        problems.append(f"dimension must be >= 1, got {spec.dimension}")
        return problems
    for (i, j), v in spec.pairs():
        if not (0 <= v <= 1):
            problems.append(f"weight for pair ({i},{j}) out of range [0,1]: {v}")
    return problems


def unit(n: int, i: int) -> tuple[Fraction, ...]:
    """Basis vector e_i (1-based)."""
    return tuple(Q(1 if k == i else 0) for k in range(1, n + 1))


def total(x: Sequence) -> Fraction:
    """Coordinate sum; multiplicative for the product below."""
    return sum((Q(e) for e in x), Q(0))


def product(spec: AlgebraSpec, x: Sequence, y: Sequence) -> tuple[Fraction, ...]:
    """Bilinear product of coordinate vectors.

    Component k:  x_k y_k + sum_{j != k} w(k,j) (x_k y_j + x_j y_k), where
    w(k,j) is the e_k weight in e_k * e_j.
    """
    n = spec.dimension
    assert len(x) == n and len(y) == n
    xs = [Q(e) for e in x]
    ys = [Q(e) for e in y]
    out = []
    for k in range(1, n + 1):
        acc = xs[k - 1] * ys[k - 1]
        for j in range(1, n + 1):
            if j == k:
                continue
            cross = xs[k - 1] * ys[j - 1] + xs[j - 1] * ys[k - 1]
            if cross:
                acc += spec.p(k, j, k) * cross
        out.append(acc)
    return tuple(out)


def basis_product(spec: AlgebraSpec, i: int, j: int) -> tuple[Fraction, ...]:
    """e_i * e_j without going through the general bilinear form."""
    n = spec.dimension
    if i == j:
        return unit(n, i)
    lo, hi = (i, j) if i < j else (j, i)
    v = spec.pair_value(lo, hi)
    return tuple(v if k == lo else (1 - v if k == hi else Q(0)) for k in range(1, n + 1))


@dataclass(frozen=True)
class HalfGraph:
    """Graph with an edge wherever a pair weight is exactly 1/2."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def has_edge(self, i: int, j: int) -> bool:
        lo, hi = (i, j) if i < j else (j, i)
        return (lo, hi) in self.edges

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(b if a == i else a for a, b in self.edges if i in (a, b))

    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for a, b in self.edges:
            degs[a - 1] += 1
            degs[b - 1] += 1
        return tuple(degs)

    def signature(self) -> tuple[int, ...]:
        """Sorted degree multiset."""
        return tuple(sorted(self.degrees()))


def half_graph(spec: AlgebraSpec) -> HalfGraph:
    edges = tuple(p for p, v in spec.pairs() if v == HALF)
    return HalfGraph(spec.dimension, edges)
