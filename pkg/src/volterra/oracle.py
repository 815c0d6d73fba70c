"""Independent cross-check routines.

Everything here deliberately avoids the main code paths: elimination runs
fraction-free, scans pivot columns right to left and candidate rows bottom
up, and recovers the kernel by back substitution; the derivation constraint
matrix is assembled by a plain triple sum over the full structure-constant
tensor instead of the product-structured form.  Results are compared with
the main solver after canonicalization; a disagreement means a bug on one
side, never a tolerance artifact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Q = Fraction


def _int_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        fr = [Q(e) for e in r]
        den = 1
        for e in fr:
            den = den * e.denominator // gcd(den, e.denominator)
        ints = [int(e * den) for e in fr]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def kernel_span_alt(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[tuple[Fraction, ...]]:
    """Spanning set (not canonical) of {v : rows . v = 0}.

    Fraction-free echelon pass, columns processed right to left, pivot row
    chosen bottom up; kernel vectors recovered by back substitution over the
    pivot columns in increasing order.
    """
    work = _int_rows(rows)
    pivot_of_col: dict[int, list[int]] = {}
    done: list[tuple[int, list[int]]] = []
    for col in reversed(range(ncols)):
        src = None
        for r in range(len(work) - 1, -1, -1):
            if work[r][col]:
                src = r
                break
        if src is None:
            continue
        prow = work.pop(src)
        for r in range(len(work)):
            if work[r][col]:
                a, b = prow[col], work[r][col]
                merged = [a * x - b * y for x, y in zip(work[r], prow)]
                g = 0
                for v in merged:
                    g = gcd(g, v)
                if g > 1:
                    merged = [v // g for v in merged]
                work[r] = merged
        done.append((col, prow))
        pivot_of_col[col] = prow
    pivot_cols = sorted(pivot_of_col)
    free_cols = [c for c in range(ncols) if c not in pivot_of_col]
    span = []
    for f in free_cols:
        x: list[Fraction] = [Q(0)] * ncols
        x[f] = Q(1)
        for c in pivot_cols:
            prow = pivot_of_col[c]
            acc = sum(Q(prow[j]) * x[j] for j in range(ncols) if j != c and prow[j])
            x[c] = -acc / Q(prow[c])
        span.append(tuple(x))
    return span


def intersect_span_via_annihilators(
    basis_a: Sequence[Sequence[Fraction]],
    basis_b: Sequence[Sequence[Fraction]],
    ambient: int,
) -> list[tuple[Fraction, ...]]:
    """Spanning set of span(a) ∩ span(b) via stacked annihilators.

    ann(S) is the kernel of the matrix with S as rows; the intersection is
    the joint kernel of ann(a) and ann(b) stacked.
    """
    ann_a = kernel_span_alt(list(basis_a), ambient)
    ann_b = kernel_span_alt(list(basis_b), ambient)
    return kernel_span_alt(ann_a + ann_b, ambient)


def structure_tensor(spec) -> list[list[list[Fraction]]]:
    """Full tensor t[i][j][k] = weight of basis vector k in e_i * e_j (0-based)."""
    n = spec.dimension
    t = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(1, n + 1):
        t[i - 1][i - 1][i - 1] = Q(1)
    for (i, j), v in spec.pairs():
        t[i - 1][j - 1][i - 1] = v
        t[j - 1][i - 1][i - 1] = v
        t[i - 1][j - 1][j - 1] = 1 - v
        t[j - 1][i - 1][j - 1] = 1 - v
    return t


def derivation_constraint_rows(spec) -> list[list[Fraction]]:
    """Constraint rows over flattened unknowns d[r][s], by brute expansion.

    For basis pair (i, j), i <= j, and output coordinate m the condition is
      sum_k t[i][j][k] d[k][m] - sum_s d[i][s] t[s][j][m] - sum_s d[j][s] t[i][s][m] = 0,
    one row per (pair, m), unknown (r, s) at flat index r*n + s (0-based).
    """
    n = spec.dimension
    t = structure_tensor(spec)
    rows = []
    for i in range(n):
        for j in range(i, n):
            for m in range(n):
                row = [Q(0)] * (n * n)
                for k in range(n):
                    if t[i][j][k]:
                        row[k * n + m] += t[i][j][k]
                for s in range(n):
                    if t[s][j][m]:
                        row[i * n + s] -= t[s][j][m]
                    if t[i][s][m]:
                        row[j * n + s] -= t[i][s][m]
                rows.append(row)
    return rows


def derivation_span_alt(spec) -> list[tuple[Fraction, ...]]:
    """Spanning set of the derivation space, entirely on the alternate path."""
    n = spec.dimension
    return kernel_span_alt(derivation_constraint_rows(spec), n * n)
