"""Exact rational linear algebra with deterministic elimination.

Every entry is a ``fractions.Fraction``; floating point never enters.
Elimination follows one fixed pivot rule (leftmost pivot column, topmost
surviving row), so identical inputs produce identical outputs on every
platform.  ``Subspace`` stores the unique reduced-row-echelon basis of a
span, which makes subspace equality plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Q = Fraction

Row = tuple[Fraction, ...]


def _row(entries: Iterable) -> Row:
    return tuple(Q(e) for e in entries)


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix; equality is exact and entrywise."""

    nrows: int
    ncols: int
    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        assert len(self.rows) == self.nrows
        assert all(len(r) == self.ncols for r in self.rows)

    @staticmethod
    def from_rows(rows: Sequence[Sequence], ncols: Optional[int] = None) -> "Matrix":
        rs = tuple(_row(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols required for a matrix with no rows")
            ncols = len(rs[0])
        return Matrix(len(rs), ncols, rs)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, tuple(tuple(Q(1 if i == j else 0) for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        """0-based access."""
        return self.rows[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, tuple(zip(*self.rows)) if self.rows else tuple(() for _ in range(self.ncols)))

    def mul(self, other: "Matrix") -> "Matrix":
        assert self.ncols == other.nrows
        cols = other.transpose().rows
        return Matrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
        )


def vecmat(x: Sequence, m: Matrix) -> Row:
    """Vector-matrix product x . m, i.e. sum_i x_i * row_i(m)."""
    assert len(x) == m.nrows
    out = [Q(0)] * m.ncols
    for xi, r in zip(x, m.rows):
        if xi:
            for j, e in enumerate(r):
                if e:
                    out[j] += Q(xi) * e
    return tuple(out)


def matvec(m: Matrix, x: Sequence) -> Row:
    assert len(x) == m.ncols
    return tuple(sum(e * Q(xi) for e, xi in zip(r, x)) for r in m.rows)


def _rref_rows(rows: Sequence[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of the nonzero part.

    Pivot rule: scan columns left to right, take the topmost not-yet-used
    row with a nonzero entry, normalize, eliminate above and below.
    Returns (nonzero reduced rows in pivot order, pivot column list).
    """
    work = [[Q(e) for e in r] for r in rows]
    pivots: list[int] = []
    target = 0
    for col in range(ncols):
        src = None
        for r in range(target, len(work)):
            if work[r][col]:
                src = r
                break
        if src is None:
            continue
        work[target], work[src] = work[src], work[target]
        piv = work[target][col]
        if piv != 1:
            work[target] = [e / piv for e in work[target]]
        prow = work[target]
        for r in range(len(work)):
            if r != target and work[r][col]:
                f = work[r][col]
                work[r] = [e - f * p for e, p in zip(work[r], prow)]
        pivots.append(col)
        target += 1
        if target == len(work):
            break
    return work[: len(pivots)], pivots


def rref(m: Matrix) -> Matrix:
    """RREF with the same shape as the input (zero rows kept at the bottom)."""
    reduced, _ = _rref_rows(m.rows, m.ncols)
    pad = [tuple(Q(0) for _ in range(m.ncols))] * (m.nrows - len(reduced))
    return Matrix(m.nrows, m.ncols, tuple(tuple(r) for r in reduced) + tuple(pad))


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.rows, m.ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient held in canonical form.

    ``vectors`` is the reduced-row-echelon basis with zero rows dropped:
    pivot columns strictly increasing, each pivot entry 1 and the only
    nonzero entry in its column.  Canonical form is unique per subspace,
    so ``==`` decides subspace equality.
    """

    ambient: int
    vectors: tuple[Row, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @staticmethod
    def span(vectors: Sequence[Sequence], ambient: int) -> "Subspace":
        """Canonical basis of the span of arbitrary vectors."""
        reduced, _ = _rref_rows(vectors, ambient)
        return Subspace(ambient, tuple(tuple(r) for r in reduced))

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace.span(Matrix.identity(ambient).rows, ambient)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    """Exact membership by residual reduction against the canonical basis."""
    assert len(v) == a.ambient
    res = [Q(e) for e in v]
    for row in a.vectors:
        lead = next(i for i, e in enumerate(row) if e)
        if res[lead]:
            f = res[lead]
            res = [e - f * p for e, p in zip(res, row)]
    return not any(res)


def subspace_le(a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b."""
    return all(subspace_contains(b, v) for v in a.vectors)


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    return a == b


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the right null space {v : m v = 0}."""
    reduced, pivots = _rref_rows(m.rows, m.ncols)
    pivset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivset]
    vecs = []
    for f in free:
        v = [Q(0)] * m.ncols
        v[f] = Q(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return Subspace.span(vecs, m.ncols)


def annihilator(a: Subspace) -> Subspace:
    """Functionals (as coordinate vectors) vanishing on the subspace."""
    if a.dim == 0:
        return Subspace.full(a.ambient)
    return kernel_basis(Matrix.from_rows(a.vectors, a.ambient))


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block construction.

    Rows [u|u] for u in a and [w|0] for w in b are reduced; reduced rows
    whose left block is zero carry the intersection in the right block.
    """
    assert a.ambient == b.ambient
    n = a.ambient
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    rows = [u + u for u in a.vectors] + [w + tuple(Q(0) for _ in range(n)) for w in b.vectors]
    reduced, _ = _rref_rows(rows, 2 * n)
    out = [r[n:] for r in reduced if not any(r[:n])]
    return Subspace.span(out, n)


def solve(m: Matrix, b: Sequence) -> Optional[Row]:
    """One exact solution of m x = b, or None if inconsistent."""
    assert len(b) == m.nrows
    aug = [list(r) + [Q(e)] for r, e in zip(m.rows, b)]
    reduced, pivots = _rref_rows(aug, m.ncols + 1)
    if m.ncols in pivots:
        return None
    x = [Q(0)] * m.ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[-1]
    return tuple(x)


class EchelonAccumulator:
    """Incrementally row-reduced constraint store over Q^ncols.

    add_row keeps the accumulated rows in reduced echelon form; rank and
    the running kernel are available at any point.  Used where constraints
    arrive in batches and the kernel dimension must be tracked per batch.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add_row(self, v: Sequence) -> bool:
        """Reduce v against the store; insert if independent. True if rank grew."""
        res = [Q(e) for e in v]
        for row, p in zip(self.rows, self.pivots):
            if res[p]:
                f = res[p]
                res = [e - f * q for e, q in zip(res, row)]
        lead = next((i for i, e in enumerate(res) if e), None)
        if lead is None:
            return False
        piv = res[lead]
        if piv != 1:
            res = [e / piv for e in res]
        for k, (row, p) in enumerate(zip(self.rows, self.pivots)):
            if row[lead]:
                f = row[lead]
                self.rows[k] = [e - f * q for e, q in zip(row, res)]
        at = next((k for k, p in enumerate(self.pivots) if p > lead), len(self.pivots))
        self.rows.insert(at, res)
        self.pivots.insert(at, lead)
        return True

    def kernel(self) -> Subspace:
        if not self.rows:
            return Subspace.full(self.ncols)
        return kernel_basis(Matrix.from_rows(self.rows, self.ncols))

    def annihilates(self, v: Sequence) -> bool:
        """True iff every stored constraint row vanishes on v."""
        return all(not sum(a * Q(e) for a, e in zip(row, v)) for row in self.rows)
