"""Exact Gauss-Jordan elimination over Q on sparse rows.

Rows are dicts ``{column: Fraction}`` holding only nonzeros; the systems
built from permutation representations and potential equations have two or
three nonzeros per row, so this stays fast without a general sparse kernel.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .stp_core import LogicalMatrix, RationalMatrix, to_fraction

Row = dict


def _rows_of(a) -> list[Row]:
    if isinstance(a, LogicalMatrix):
        a = a.to_dense()
    if not isinstance(a, RationalMatrix):
        a = RationalMatrix(a)
    out = []
    for r in a.array.tolist():
        out.append({j: x for j, x in enumerate(r) if x != 0})
    return out


def _eliminate(rows: list[Row], columns: Iterable[int]) -> list[tuple[int, int]]:
    """Gauss-Jordan in place over ``columns`` (in the given order).

    The pivot for each column is the first remaining row with a nonzero there.
    Returns ``(row, column)`` pivot pairs in elimination order.
    """
    pivots = []
    used = [False] * len(rows)
    for c in columns:
        pr = next((r for r in range(len(rows)) if not used[r] and c in rows[r]), None)
        if pr is None:
            continue
        used[pr] = True
        prow = rows[pr]
        inv = 1 / prow[c]
        if inv != 1:
            for k in prow:
                prow[k] *= inv
        for r in range(len(rows)):
            if r == pr:
                continue
            row = rows[r]
            f = row.get(c)
            if f is None:
                continue
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        pivots.append((pr, c))
    return pivots


def rref(a: RationalMatrix, column_order: Optional[Sequence[int]] = None) -> tuple[RationalMatrix, list[int]]:
    """Reduced row-echelon form and pivot columns (zero rows dropped to the bottom)."""
    a = RationalMatrix(a) if not isinstance(a, RationalMatrix) else a
    rows = _rows_of(a)
    order = range(a.cols) if column_order is None else column_order
    pivots = _eliminate(rows, order)
    pivots.sort(key=lambda rc: rc[1])
    zero = Fraction(0)
    out = [[rows[r].get(j, zero) for j in range(a.cols)] for r, _ in pivots]
    out += [[zero] * a.cols for _ in range(a.rows - len(pivots))]
    return RationalMatrix._wrap(_to_array(out, a.rows, a.cols)), [c for _, c in pivots]


def _to_array(rows, m, n):
    arr = np.empty((m, n), dtype=object)
    for i, r in enumerate(rows):
        arr[i, :] = r
    return arr


def rank(a) -> int:
    if not isinstance(a, (RationalMatrix, LogicalMatrix)):
        a = RationalMatrix(a)
    return len(_eliminate(_rows_of(a), range(a.cols)))


def nullspace(a) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : a x = 0}`` in canonical (reduced row-echelon) form."""
    if isinstance(a, LogicalMatrix):
        a = a.to_dense()
    if not isinstance(a, RationalMatrix):
        a = RationalMatrix(a)
    return sparse_nullspace(_rows_of(a), a.cols)


def sparse_nullspace(rows: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    """Like :func:`nullspace` for a system given as sparse rows ``{column: value}``."""
    rows = [{j: to_fraction(x) for j, x in r.items() if x} for r in rows]
    pivots = _eliminate(rows, range(ncols))
    pivot_cols = {c for _, c in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, c in pivots:
            v = rows[r].get(f)
            if v is not None:
                x[c] = -v
        basis.append(x)
    return canonical_basis(basis, ncols)


def canonical_basis(vectors: Sequence[Sequence], dim: Optional[int] = None) -> list[tuple[Fraction, ...]]:
    """The unique reduced row-echelon basis of ``span(vectors)``."""
    vectors = [[to_fraction(x) for x in v] for v in vectors]
    if not vectors:
        return []
    n = len(vectors[0]) if dim is None else dim
    rows = [{j: x for j, x in enumerate(v) if x != 0} for v in vectors]
    pivots = _eliminate(rows, range(n))
    pivots.sort(key=lambda rc: rc[1])
    zero = Fraction(0)
    return [tuple(rows[r].get(j, zero) for j in range(n)) for r, _ in pivots]


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    """Whether two finite vector families span the same subspace."""
    return canonical_basis(u) == canonical_basis(v)


def solve(a, b: Sequence, column_order: Optional[Sequence[int]] = None) -> Optional[tuple[Fraction, ...]]:
    """A solution of ``a x = b`` with free variables set to zero, or ``None`` if inconsistent.

    ``column_order`` changes which columns are tried as pivots first and
    hence which particular solution is returned.
    """
    if isinstance(a, LogicalMatrix):
        a = a.to_dense()
    if not isinstance(a, RationalMatrix):
        a = RationalMatrix(a)
    b = [to_fraction(x) for x in b]
    if len(b) != a.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {a.rows}")
    n = a.cols
    rows = _rows_of(a)
    for row, bi in zip(rows, b):
        if bi:
            row[n] = bi
    pivots = _eliminate(rows, range(n) if column_order is None else column_order)
    pivot_rows = {r for r, _ in pivots}
    for r, row in enumerate(rows):
        if r not in pivot_rows and n in row:
            return None
    x = [Fraction(0)] * n
    for r, c in pivots:
        x[c] = rows[r].get(n, Fraction(0))
    return tuple(x)
