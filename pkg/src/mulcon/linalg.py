"""Exact rank over F_p and over QQ.

Over F_p, matrices whose larger side is below ``DENSE_LIMIT`` go through a
vectorised numpy elimination on int64 residues; larger ones through a
sparse elimination with Markowitz-style pivot choice.  Over QQ rows are
cleared of denominators and reduced fraction-free with gcd normalisation.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np

from .fields import FieldDescriptor
from .matrix import MapMatrix

DENSE_LIMIT = 256


def rank_mod_p_dense(a, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(a[r + 1 :, c])
        if below.size:
            f = a[below, c][:, None]
            a[below] = (a[below] - f * a[r]) % p
        r += 1
    return r


def rank_mod_p_sparse(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a matrix given as a list of ``{col: value}`` rows."""
    rows = [{c: v % p for c, v in row.items() if v % p} for row in rows]
    live = {i for i, row in enumerate(rows) if row}
    col_rows: dict[int, set[int]] = {}
    for i in live:
        for c in rows[i]:
            col_rows.setdefault(c, set()).add(i)
    rank = 0
    while live:
        # cheapest row, then within it the column touching fewest other rows
        i = min(live, key=lambda k: (len(rows[k]), k))
        prow = rows[i]
        c = min(prow, key=lambda j: (len(col_rows[j]), j))
        live.discard(i)
        for j in prow:
            col_rows[j].discard(i)
        inv = pow(prow[c], -1, p)
        for k in list(col_rows[c]):
            row = rows[k]
            f = row[c] * inv % p
            for j, v in prow.items():
                old = row.get(j)
                new = ((old or 0) - f * v) % p
                if new:
                    row[j] = new
                    if old is None:
                        col_rows[j].add(k)
                elif old is not None:
                    del row[j]
                    col_rows[j].discard(k)
            if not row:
                live.discard(k)
        rank += 1
    return rank


def rank_mod_p(a, p: int) -> int:
    """Rank over F_p of a dense integer array-like."""
    a = (np.asarray(a, dtype=object) % p).astype(np.int64)
    if a.size == 0:
        return 0
    if max(a.shape) < DENSE_LIMIT:
        return rank_mod_p_dense(a, p)
    return rank_mod_p_sparse([{j: int(v) for j, v in enumerate(row) if v} for row in a.tolist()], p)


def _integer_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(v) for v in row]
        den = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * den) for v in row])
    return out


def rank_rational(a) -> int:
    """Rank over QQ of a dense array-like of integers or fractions."""
    rows = [r for r in _integer_rows(np.asarray(a, dtype=object).tolist()) if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        top = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                new = [top[c] * x - f * y for x, y in zip(rows[i], top)]
                g = gcd(*new)
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == len(rows):
            break
    return r


def rank(mat: MapMatrix) -> int:
    """Exact rank of ``mat`` over its own field."""
    if mat.nnz == 0:
        return 0
    p = mat.field.p
    if p is None:
        return rank_rational(mat.to_dense())
    if max(mat.shape) < DENSE_LIMIT:
        return rank_mod_p_dense(mat.to_dense(), p)
    return rank_mod_p_sparse(mat.to_rows(), p)


def kernel_dim(mat: MapMatrix) -> int:
    return mat.ncols - rank(mat)


def cokernel_dim(mat: MapMatrix) -> int:
    return mat.nrows - rank(mat)


def rank_nullity(mat: MapMatrix) -> tuple[int, int, int]:
    """``(rank, kernel_dim, cokernel_dim)`` from a single elimination."""
    rk = rank(mat)
    ker, coker = mat.ncols - rk, mat.nrows - rk
    assert ker + rk == mat.ncols and coker + rk == mat.nrows
    return rk, ker, coker


def is_maximal_rank(mat: MapMatrix) -> bool:
    return rank(mat) == min(mat.shape)


def is_invertible(a, field: FieldDescriptor) -> bool:
    a = np.asarray(a, dtype=object)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    if field.p is None:
        return rank_rational(a) == a.shape[0]
    return rank_mod_p(np.vectorize(field, otypes=[object])(a), field.p) == a.shape[0]
