"""Exhaustive enumeration of bricks over a small prime field.

This is an independent oracle: it never looks at strings or bands, it just
tries every tuple of matrices of a given dimension vector.
"""

from __future__ import annotations

import itertools

import numpy as np

from ..errors import BudgetExceeded, PreconditionError
from .field import FieldSpec
from .linalg import rank_mod_p
from .representation import Representation, as_bound_quiver, is_isomorphic

DEFAULT_BUDGET = 10**7


def _hom_matrix(q, dm: dict, dn: dict, mm: dict, nm: dict) -> tuple[np.ndarray, int]:
    """Dense system for ``N_a g_s - g_t M_a = 0`` with row-major ``vec(g_v)``."""
    offset, ncols = {}, 0
    for v in q.vertices:
        offset[v] = ncols
        ncols += dn[v] * dm[v]
    blocks = []
    for a in q.arrows:
        s, t = a.source, a.target
        rows = dn[t] * dm[s]
        if rows == 0:
            continue
        block = np.zeros((rows, ncols), dtype=np.int64)
        # vec(N_a g_s) = (N_a kron I) vec(g_s); vec(g_t M_a) = (I kron M_a^T) vec(g_t)
        cs = offset[s]
        block[:, cs:cs + dn[s] * dm[s]] += np.kron(nm[a.name], np.eye(dm[s], dtype=np.int64))
        ct = offset[t]
        block[:, ct:ct + dn[t] * dm[t]] -= np.kron(np.eye(dn[t], dtype=np.int64), mm[a.name].T)
        blocks.append(block)
    if not blocks:
        return np.zeros((0, ncols), dtype=np.int64), ncols
    return np.vstack(blocks), ncols


def fast_hom_dim(q, dm, dn, mm, nm, p: int) -> int:
    a, ncols = _hom_matrix(q, dm, dn, mm, nm)
    return ncols - (rank_mod_p(a, p) if a.size else 0)


def _connected_support(q, dims: dict) -> bool:
    support = [v for v in q.vertices if dims[v]]
    if not support:
        return False
    seen, stack = {support[0]}, [support[0]]
    while stack:
        v = stack.pop()
        for a in q.arrows:
            for x, y in ((a.source, a.target), (a.target, a.source)):
                if x == v and dims[y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return len(seen) == len(support)


def brute_force_bricks(ambient, dims: dict[str, int], field: FieldSpec, budget: int = DEFAULT_BUDGET) -> list[Representation]:
    """All bricks of dimension vector ``dims``, one per isomorphism class.

    Every matrix tuple satisfying the relations is tested; bricks are then
    deduplicated by searching for an invertible intertwiner. A brick has
    connected support, so disconnected dimension vectors return ``[]`` at once.
    """
    if not field.is_finite:
        raise PreconditionError("brute force enumeration needs a prime field")
    bq = as_bound_quiver(ambient)
    q, p = bq.quiver, field.characteristic
    dims = {v: int(dims.get(v, 0)) for v in q.vertices}
    shapes = [(a.name, dims[a.target], dims[a.source]) for a in q.arrows]
    entries = sum(r * c for _, r, c in shapes)
    if p ** entries > budget:
        raise BudgetExceeded(f"{p}^{entries} matrix tuples exceed the budget {budget}")
    if not _connected_support(q, dims):
        return []
    rels = [[(int(field(c)), s, f) for c, s, f in r.terms] for r in bq.relations]
    classes: list[Representation] = []
    raw: list[dict] = []
    for flat in itertools.product(range(p), repeat=entries):
        mats, pos = {}, 0
        for name, r, c in shapes:
            mats[name] = np.array(flat[pos:pos + r * c], dtype=np.int64).reshape(r, c)
            pos += r * c
        if any(
            np.any(sum(c * (mats[s] @ mats[f]) for c, s, f in rel) % p)
            for rel in rels
        ):
            continue
        if fast_hom_dim(q, dims, dims, mats, mats, p) != 1:
            continue
        if any(
            fast_hom_dim(q, dims, dims, mats, other, p) and fast_hom_dim(q, dims, dims, other, mats, p)
            and is_isomorphic(_as_rep(bq, field, dims, mats), cls)
            for other, cls in zip(raw, classes)
        ):
            continue
        raw.append(mats)
        classes.append(_as_rep(bq, field, dims, mats))
    return classes


def _as_rep(bq, field, dims, mats) -> Representation:
    return Representation(bq, field, dims, {a: m.astype(object) for a, m in mats.items()})
