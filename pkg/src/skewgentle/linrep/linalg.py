"""Sparse exact Gaussian elimination.

Rows are ``{column: nonzero scalar}`` dicts. Pivoting is deterministic: every
row is reduced against the existing pivots in increasing column order and its
smallest surviving column becomes its pivot, normalized to 1. The echelon form
is enough to back-substitute a nullspace basis, one vector per free column.
"""

from __future__ import annotations

import heapq

import numpy as np

from .field import FieldSpec


class Echelon:
    """Incrementally built row-echelon form over ``field``."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict[int, dict[int, object]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, object]) -> dict[int, object]:
        p = self.field.characteristic
        row = {c: v for c, v in row.items() if v != 0}
        heap = list(row)
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            if c not in row:
                continue
            prow = self.pivots.get(c)
            if prow is None:
                continue
            coef = row.pop(c)
            for cc, v in prow.items():
                if cc == c:
                    continue
                old = row.get(cc)
                nv = (0 if old is None else old) - coef * v
                if p:
                    nv %= p
                if nv == 0:
                    if old is not None:
                        del row[cc]
                else:
                    if old is None:
                        heapq.heappush(heap, cc)
                    row[cc] = nv
        return row

    def add(self, row: dict[int, object]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = self.field.inv(row[c])
        p = self.field.characteristic
        self.pivots[c] = {k: (v * inv % p if p else v * inv) for k, v in row.items()}
        return True

    def nullspace(self, ncols: int) -> list[dict[int, object]]:
        """Sparse basis of ``{x : row . x = 0 for every row}``."""
        f, p = self.field, self.field.characteristic
        order = sorted(self.pivots, reverse=True)
        basis = []
        for free in range(ncols):
            if free in self.pivots:
                continue
            x = {free: f.one}
            for c in order:
                if c > free:
                    # pivot rows only involve columns >= their pivot
                    continue
                s = 0
                for cc, v in self.pivots[c].items():
                    if cc != c and cc in x:
                        s += v * x[cc]
                if p:
                    s %= p
                if s != 0:
                    x[c] = -s % p if p else -s
            basis.append(x)
        return basis


def solve_nullspace(rows, ncols: int, field: FieldSpec) -> list[dict[int, object]]:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.nullspace(ncols)


def dense_rows(a: np.ndarray) -> list[dict[int, object]]:
    return [{j: a[i, j] for j in range(a.shape[1]) if a[i, j] != 0} for i in range(a.shape[0])]


def rank(a: np.ndarray, field: FieldSpec) -> int:
    ech = Echelon(field)
    for r in dense_rows(a):
        ech.add(r)
    return ech.rank


def kernel_matrix(a: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Columns form a basis of the right kernel of ``a``."""
    basis = solve_nullspace(dense_rows(a), a.shape[1], field)
    out = field.zeros(a.shape[1], len(basis))
    for j, vec in enumerate(basis):
        for i, v in vec.items():
            out[i, j] = v
    return out


def cokernel_matrix(a: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Rows form a basis of the left kernel of ``a``: ``C @ a == 0`` and ``C`` has full row rank."""
    return kernel_matrix(a.T, field).T.copy()


def is_invertible(a: np.ndarray, field: FieldSpec) -> bool:
    return a.shape[0] == a.shape[1] and rank(a, field) == a.shape[0]


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over ``F_p`` using vectorized row operations."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        r += 1
    return r
