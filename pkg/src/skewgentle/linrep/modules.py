"""String and band modules of a gentle pair."""

from __future__ import annotations

from ..errors import PreconditionError
from ..presentation import GentlePair
from ..strings import Band, Walk, canonical_band, is_band, is_string, letter_end, letter_start
from .field import FieldSpec
from .representation import Representation


def _occurrence_layout(vertices: list[str], block: int):
    """Offset of each occurrence inside the space at its vertex, plus the dims."""
    dims: dict[str, int] = {}
    offset = []
    for v in vertices:
        offset.append(dims.get(v, 0))
        dims[v] = dims.get(v, 0) + block
    return offset, dims


def string_module(g: GentlePair, w: Walk, field: FieldSpec) -> Representation:
    """One basis vector per vertex occurrence; every letter acts by identity.

    Occurrence ``k`` is ``s(w_k)`` (occurrence 0 is ``t(w_1)``). A forward
    letter ``w_k`` sends occurrence ``k`` to ``k-1``, an inverse letter sends
    ``k-1`` to ``k`` along its arrow.
    """
    if not is_string(w, g):
        raise PreconditionError(f"'{w}' is not a string")
    q = g.quiver
    occ = w.vertices(q)
    offset, dims = _occurrence_layout(occ, 1)
    maps = {a.name: field.zeros(dims.get(a.target, 0), dims.get(a.source, 0)) for a in q.arrows}
    for k, x in enumerate(w.letters, start=1):
        src, dst = (k - 1, k) if x.inverse else (k, k - 1)
        maps[x.arrow][offset[dst], offset[src]] += field.one
    return Representation(g, field, dims, maps)


def band_module(g: GentlePair, b: Band, lam, n: int, field: FieldSpec) -> Representation:
    """``M_b(lam, n)``: blocks of size ``n`` per occurrence, ``J_n(lam)`` on the last letter.

    The band is first brought to its canonical rotation so the result does
    not depend on how ``b`` was written.
    """
    lam = field(lam)
    if lam == 0:
        raise PreconditionError("band modules need a nonzero eigenvalue")
    if n < 1:
        raise PreconditionError("band module size must be positive")
    if not is_band(b, g):
        raise PreconditionError(f"'{b}' is not a band")
    q = g.quiver
    b = canonical_band(b, q)
    m = len(b)
    occ = b.vertices(q)  # occurrence k is s(w_k) for k < m, occurrence 0 closes the cycle
    offset, dims = _occurrence_layout(occ, n)
    maps = {a.name: field.zeros(dims.get(a.target, 0), dims.get(a.source, 0)) for a in q.arrows}
    ident = field.identity(n)
    jordan = field.identity(n) * lam
    for i in range(n - 1):
        jordan[i, i + 1] = field.one
    for k, x in enumerate(b.letters, start=1):
        here, there = k % m, k - 1
        assert letter_start(q, x) == occ[here] and letter_end(q, x) == occ[there]
        src, dst = (there, here) if x.inverse else (here, there)
        block = jordan if k == m else ident
        r, c = offset[dst], offset[src]
        maps[x.arrow][r:r + n, c:c + n] += block
    if field.characteristic:
        maps = {a: field.reduce(mat) for a, mat in maps.items()}
    return Representation(g, field, dims, maps)
