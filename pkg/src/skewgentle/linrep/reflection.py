"""BGP reflection functors and preprojective orbits on relation-free quivers."""

from __future__ import annotations

import graphlib
from typing import NamedTuple

import numpy as np

from ..errors import PreconditionError, ReflectionError
from ..polarization import BoundQuiver
from ..presentation import Arrow, Quiver
from .linalg import cokernel_matrix, kernel_matrix, rank
from .representation import Representation, as_bound_quiver, projective


def flip_at(q: Quiver, v: str) -> Quiver:
    """Reverse every arrow incident to ``v``; names are kept."""
    arrows = tuple(
        Arrow(a.name, a.target, a.source) if v in (a.source, a.target) else a
        for a in q.arrows
    )
    return Quiver(q.vertices, arrows)


def is_sink(q: Quiver, v: str) -> bool:
    return not q.arrows_out(v)


def is_source(q: Quiver, v: str) -> bool:
    return not q.arrows_in(v)


def reflect(m: Representation, v: str) -> Representation:
    """``S+`` at a sink or ``S-`` at a source, on the quiver flipped at ``v``.

    At a sink the new space is the kernel of ``(M_a)_a : (+) M_s(a) -> M_v``,
    at a source it is the cokernel of ``M_v -> (+) M_t(a)``; incoming arrows
    are taken in declaration order. The canonical map must be surjective
    (sink) or injective (source), i.e. the simple at ``v`` is not a summand.
    """
    bq = m.ambient
    if not bq.hereditary:
        raise PreconditionError("reflection functors need a relation-free quiver")
    q, f = bq.quiver, m.field
    if any(a.is_loop for a in q.arrows if a.source == v):
        raise ReflectionError(f"vertex '{v}' carries a loop")
    sink, source = is_sink(q, v), is_source(q, v)
    if not (sink or source):
        raise ReflectionError(f"vertex '{v}' is neither a sink nor a source")
    newq = flip_at(q, v)
    dims = dict(m.dims)
    maps = dict(m.maps)
    if sink:
        arrows = q.arrows_in(v)
        widths = [m.dims[a.source] for a in arrows]
        big = np.concatenate([m.maps[a.name] for a in arrows], axis=1) if arrows else f.zeros(m.dims[v], 0)
        if rank(big, f) != m.dims[v]:
            raise ReflectionError(f"map into sink '{v}' is not surjective")
        ker = kernel_matrix(big, f)
        dims[v] = ker.shape[1]
        start = 0
        for a, w in zip(arrows, widths):
            maps[a.name] = ker[start:start + w, :].copy()
            start += w
    else:
        arrows = q.arrows_out(v)
        heights = [m.dims[a.target] for a in arrows]
        big = np.concatenate([m.maps[a.name] for a in arrows], axis=0) if arrows else f.zeros(0, m.dims[v])
        if rank(big, f) != m.dims[v]:
            raise ReflectionError(f"map out of source '{v}' is not injective")
        cok = cokernel_matrix(big, f)
        dims[v] = cok.shape[0]
        start = 0
        for a, h in zip(arrows, heights):
            maps[a.name] = cok[:, start:start + h].copy()
            start += h
    return Representation(BoundQuiver(newq), f, dims, maps)


def source_order(ambient) -> list[str]:
    """Vertices in an order where each is a source after reflecting the previous ones."""
    q = as_bound_quiver(ambient).quiver
    ts = graphlib.TopologicalSorter({v: set() for v in q.vertices})
    for a in q.arrows:
        ts.add(a.target, a.source)
    try:
        ts.prepare()
    except graphlib.CycleError as exc:
        raise PreconditionError("quiver has an oriented cycle") from exc
    order = []
    while ts.is_active():
        ready = sorted(ts.get_ready(), key=q.vertex_index.__getitem__)
        order.extend(ready)
        ts.done(*ready)
    return order


def coxeter_step(m: Representation, order: list[str] | None = None) -> Representation:
    """One application of the inverse Coxeter functor; the zero module if ``m`` is killed."""
    order = source_order(m.ambient) if order is None else order
    cur = m
    for v in order:
        support = [u for u, d in cur.dims.items() if d]
        if support == [v]:
            # a simple at a source is sent to zero
            return Representation(m.ambient, m.field, {})
        cur = reflect(cur, v)
    return cur


class Orbit(NamedTuple):
    modules: list[Representation]
    exhausted: bool


def coxeter_orbit(ambient, start: Representation, k: int) -> Orbit:
    """``start, C^-1 start, ..., C^-(k-1) start`` for an acyclic relation-free quiver.

    ``exhausted`` is set when the orbit reaches the zero module before ``k``
    elements (finite representation type); the list is then truncated.
    """
    bq = as_bound_quiver(ambient)
    if not bq.hereditary:
        raise PreconditionError("coxeter_orbit needs a relation-free quiver")
    if start.quiver != bq.quiver:
        raise PreconditionError("start module lives on a different quiver")
    order = source_order(bq)
    out = [start]
    while len(out) < k:
        nxt = coxeter_step(out[-1], order)
        if nxt.is_zero():
            return Orbit(out, True)
        out.append(Representation(bq, nxt.field, nxt.dims, nxt.maps))
    return Orbit(out, False)


def preprojective(ambient, vertex: str, field, k: int) -> Orbit:
    """Orbit of the indecomposable projective at ``vertex``."""
    bq = as_bound_quiver(ambient)
    return coxeter_orbit(bq, projective(bq, vertex, field), k)
