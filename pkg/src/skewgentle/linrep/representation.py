"""Representations of bound quivers over exact fields, Hom spaces and bricks."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from ..errors import PreconditionError
from ..polarization import BoundQuiver, LinearRelation
from ..presentation import GentlePair, SkewGentlePresentation
from .field import FieldSpec
from .linalg import Echelon, is_invertible


def as_bound_quiver(ambient) -> BoundQuiver:
    """Accept a :class:`BoundQuiver`, a gentle pair or a presentation without special vertices."""
    if isinstance(ambient, BoundQuiver):
        return ambient
    if isinstance(ambient, GentlePair):
        return BoundQuiver(ambient.quiver, tuple(LinearRelation.monomial(r) for r in ambient.relations))
    if isinstance(ambient, SkewGentlePresentation):
        if ambient.special:
            raise PreconditionError("polarize a presentation with special vertices first")
        return BoundQuiver(ambient.quiver, tuple(LinearRelation.monomial(r) for r in ambient.relations))
    raise TypeError(f"cannot use {type(ambient).__name__} as a bound quiver")


class Representation:
    """Dimension vector plus one matrix of shape ``dims[t] x dims[s]`` per arrow.

    Matrices are read-only numpy object arrays of exact scalars. Shapes are
    validated on construction; relations are checked by :meth:`check_relations`.
    """

    def __init__(self, ambient, field: FieldSpec, dims: dict[str, int], maps: dict[str, np.ndarray] | None = None):
        self.ambient = as_bound_quiver(ambient)
        self.field = field
        q = self.ambient.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        unknown = set(dims) - set(q.vertices)
        if unknown:
            raise PreconditionError(f"dimension given for unknown vertices {sorted(unknown)}")
        if any(d < 0 for d in self.dims.values()):
            raise PreconditionError("dimensions must be non-negative")
        maps = dict(maps or {})
        unknown = set(maps) - {a.name for a in q.arrows}
        if unknown:
            raise PreconditionError(f"matrix given for unknown arrows {sorted(unknown)}")
        self.maps: dict[str, np.ndarray] = {}
        for a in q.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.get(a.name)
            m = field.zeros(*shape) if m is None else field.matrix(m, shape if np.size(m) == 0 else None)
            if m.shape != shape:
                raise PreconditionError(
                    f"matrix for arrow '{a.name}' has shape {m.shape}, expected {shape}")
            m.setflags(write=False)
            self.maps[a.name] = m

    @property
    def quiver(self):
        return self.ambient.quiver

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.quiver.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __repr__(self) -> str:
        dims = " ".join(f"{v}={d}" for v, d in self.dims.items())
        return f"<Representation over {self.field}: {dims}>"

    def check_relations(self) -> bool:
        """Every linear relation ``sum c_k b_k a_k`` acts as the zero matrix."""
        f = self.field
        for rel in self.ambient.relations:
            total = None
            for c, second, first in rel.terms:
                term = f.matmul(self.maps[second], self.maps[first])
                term = term * f(c)
                total = term if total is None else total + term
            if f.characteristic:
                total = total % f.characteristic
            if not f.is_zero(total):
                return False
        return True


def _same_setting(m: Representation, n: Representation) -> None:
    if m.field != n.field:
        raise PreconditionError(f"field mismatch: {m.field} vs {n.field}")
    if m.quiver != n.quiver:
        raise PreconditionError("representations live on different quivers")


@dataclass
class HomBasis:
    dimension: int
    basis: list[dict[str, np.ndarray]]


def _hom_system(m: Representation, n: Representation):
    """Unknown layout and sparse equations of ``N_a g_s = g_t M_a``."""
    p = m.field.characteristic
    q = m.quiver
    offset, col = {}, 0
    for v in q.vertices:
        offset[v] = col
        col += n.dims[v] * m.dims[v]

    def var(v, i, j):  # entry (i, j) of g_v, shape dims_N(v) x dims_M(v)
        return offset[v] + i * m.dims[v] + j

    rows = []
    for a in q.arrows:
        s, t = a.source, a.target
        ma, na = m.maps[a.name], n.maps[a.name]
        na_nz = [[(k, na[i, k]) for k in range(na.shape[1]) if na[i, k] != 0] for i in range(na.shape[0])]
        ma_nz = [[(k, ma[k, j]) for k in range(ma.shape[0]) if ma[k, j] != 0] for j in range(ma.shape[1])]
        for i in range(n.dims[t]):
            for j in range(m.dims[s]):
                row: dict[int, object] = {}
                for k, v in na_nz[i]:
                    c = var(s, k, j)
                    row[c] = row.get(c, 0) + v
                for k, v in ma_nz[j]:
                    c = var(t, i, k)
                    row[c] = row.get(c, 0) - v
                if p:
                    row = {c: v % p for c, v in row.items()}
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    rows.append(row)
    return offset, col, rows


def _unpack(vec: dict[int, object], m: Representation, n: Representation, offset) -> dict[str, np.ndarray]:
    f = m.field
    out = {}
    for v in m.quiver.vertices:
        g = f.zeros(n.dims[v], m.dims[v])
        base = offset[v]
        for i in range(n.dims[v]):
            for j in range(m.dims[v]):
                x = vec.get(base + i * m.dims[v] + j)
                if x is not None:
                    g[i, j] = f(x)
        out[v] = g
    return out


def hom_basis(m: Representation, n: Representation) -> HomBasis:
    """Basis of ``Hom(M, N)`` by exact nullspace of the intertwining equations."""
    _same_setting(m, n)
    offset, ncols, rows = _hom_system(m, n)
    ech = Echelon(m.field)
    for r in rows:
        ech.add(r)
    vecs = ech.nullspace(ncols)
    return HomBasis(len(vecs), [_unpack(v, m, n, offset) for v in vecs])


def hom_dim(m: Representation, n: Representation) -> int:
    _same_setting(m, n)
    _, ncols, rows = _hom_system(m, n)
    ech = Echelon(m.field)
    for r in rows:
        ech.add(r)
    return ncols - ech.rank


def is_intertwiner(g: dict[str, np.ndarray], m: Representation, n: Representation) -> bool:
    f = m.field
    for a in m.quiver.arrows:
        lhs = f.matmul(n.maps[a.name], g[a.source])
        rhs = f.matmul(g[a.target], m.maps[a.name])
        diff = lhs - rhs
        if f.characteristic:
            diff = diff % f.characteristic
        if not f.is_zero(diff):
            return False
    return True


def end_dim(m: Representation) -> int:
    if not m.check_relations():
        raise PreconditionError("representation does not satisfy the relations")
    return hom_dim(m, m)


def is_brick(m: Representation) -> bool:
    return end_dim(m) == 1


# --- constructions -----------------------------------------------------------

def direct_sum(m: Representation, n: Representation) -> Representation:
    _same_setting(m, n)
    f = m.field
    dims = {v: m.dims[v] + n.dims[v] for v in m.quiver.vertices}
    maps = {}
    for a in m.quiver.arrows:
        ma, na = m.maps[a.name], n.maps[a.name]
        block = f.zeros(dims[a.target], dims[a.source])
        block[: ma.shape[0], : ma.shape[1]] = ma
        block[ma.shape[0]:, ma.shape[1]:] = na
        maps[a.name] = block
    return Representation(m.ambient, f, dims, maps)


def simple(ambient, vertex: str, field: FieldSpec) -> Representation:
    bq = as_bound_quiver(ambient)
    if vertex not in bq.quiver.vertex_index:
        raise PreconditionError(f"unknown vertex '{vertex}'")
    return Representation(bq, field, {vertex: 1})


def projective(ambient, vertex: str, field: FieldSpec) -> Representation:
    """Indecomposable projective at ``vertex`` of an acyclic relation-free quiver.

    Basis at ``v``: the paths from ``vertex`` to ``v``; arrows act by post-composition.
    """
    bq = as_bound_quiver(ambient)
    if not bq.hereditary:
        raise PreconditionError("projective() only supports relation-free quivers")
    q = bq.quiver
    paths: dict[str, list[tuple[str, ...]]] = {v: [] for v in q.vertices}
    frontier = [((), vertex)]
    while frontier:
        nxt = []
        for path, v in frontier:
            paths[v].append(path)
            if len(path) > len(q.arrows):
                raise PreconditionError("quiver has an oriented cycle")
            nxt.extend((path + (a.name,), a.target) for a in q.arrows_out(v))
        frontier = nxt
    index = {v: {p: i for i, p in enumerate(ps)} for v, ps in paths.items()}
    maps = {}
    for a in q.arrows:
        mat = field.zeros(len(paths[a.target]), len(paths[a.source]))
        for j, path in enumerate(paths[a.source]):
            mat[index[a.target][path + (a.name,)], j] = field.one
        maps[a.name] = mat
    return Representation(bq, field, {v: len(ps) for v, ps in paths.items()}, maps)


def is_isomorphic(m: Representation, n: Representation, *, budget: int = 10**5, trials: int = 20, seed: int = 0) -> bool:
    """Search ``Hom(M, N)`` for a vertexwise invertible element.

    Over a finite field every combination of the basis is tried while
    ``|F|^dim Hom`` stays within ``budget``; otherwise (and over the rationals)
    seeded random combinations are tried. A True answer is always certain.
    """
    _same_setting(m, n)
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    f = m.field
    hb = hom_basis(m, n)
    if hb.dimension == 0:
        return False

    def invertible(coeffs) -> bool:
        for v in m.quiver.vertices:
            g = f.zeros(n.dims[v], m.dims[v])
            for c, b in zip(coeffs, hb.basis):
                if c:
                    g = g + b[v] * f(c)
            if f.characteristic:
                g = g % f.characteristic
            if not is_invertible(g, f):
                return False
        return True

    if f.is_finite and f.characteristic ** hb.dimension <= budget:
        combos = itertools.product(f.elements(), repeat=hb.dimension)
        return any(invertible(c) for c in combos if any(c))
    rng = random.Random(seed)
    span = f.characteristic - 1 if f.is_finite else 10**6
    for _ in range(trials):
        if invertible([rng.randint(0, span) for _ in range(hb.dimension)]):
            return True
    return False
