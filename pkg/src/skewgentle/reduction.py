"""Minimal bands, support quotients and the case split for brick families.

A minimal band is either *simple* (no vertex is visited twice and no special
vertex is visited at all) or *pinched*: a rotation reads
``b' omega b'' omega^-1`` where ``b'`` and ``b''`` are closed strings at the
pinch vertices ``x = t(omega)`` and ``y = s(omega)`` whose squares are not
strings, every piece is vertex-simple, the pieces only meet at the pinches,
and the only special vertices visited are pinches whose loop piece is the
special loop itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import PreconditionError, SkewGentleError
from .presentation import GentlePair, Quiver, SkewGentlePresentation, build_qsp, special_loop_name
from .strings import (
    Band,
    Letter,
    Walk,
    canonical_band,
    is_band,
    is_string,
    letter_graph,
    rotations,
    walk_key,
)

SIMPLE = "Simple"
PINCHED = "Pinched"


@dataclass(frozen=True)
class MinimalBand:
    kind: str
    band: Band
    bprime: Walk | None = None
    omega: Walk | None = None
    bdprime: Walk | None = None

    @property
    def simple(self) -> Band | None:
        return self.band if self.kind == SIMPLE else None

    @property
    def pinched(self) -> tuple[Walk, Walk, Walk] | None:
        return (self.bprime, self.omega, self.bdprime) if self.kind == PINCHED else None

    def pinches(self, q: Quiver) -> tuple[str, str] | None:
        if self.kind != PINCHED:
            return None
        return self.omega.target(q), self.omega.source(q)

    def __str__(self) -> str:
        if self.kind == SIMPLE:
            return f"Simple({self.band})"
        return f"Pinched(b'={self.bprime}, omega={self.omega}, b''={self.bdprime})"


# --- invariant checks ------------------------------------------------------------

def _closed_vertices(w: Walk, q: Quiver) -> list[str]:
    return w.vertices(q)[:-1]


def _distinct(xs) -> bool:
    return len(set(xs)) == len(xs)


def _visited_special(g: GentlePair, b: Band) -> set[str]:
    return set(b.vertices(g.quiver)) & set(g.special)


def simple_violations(g: GentlePair, b: Band) -> list[str]:
    q = g.quiver
    out = []
    if not _distinct(b.vertices(q)):
        out.append("simple: a vertex is visited twice")
    if _visited_special(g, b):
        out.append("simple: a special vertex is visited")
    return out


def pinched_violations(g: GentlePair, bp: Walk, om: Walk, bd: Walk) -> list[str]:
    """Violated conditions of the pinched shape ``b' omega b'' omega^-1``."""
    q = g.quiver
    out = []
    if bp.is_trivial or bd.is_trivial:
        return ["pieces: b' and b'' must be non-trivial"]
    x, y = om.target(q), om.source(q)
    if not (bp.source(q) == bp.target(q) == x and bd.source(q) == bd.target(q) == y):
        return ["pieces: b' or b'' is not closed at its pinch"]
    if not (is_string(bp, g) and is_string(bd, g) and is_string(om, g)):
        out.append("pieces: a piece is not a string")
    if is_string(Walk(bp.letters * 2), g) or is_string(Walk(bd.letters * 2), g):
        out.append("primitive: b'^2 or b''^2 is a string")
    vp, vd, vo = _closed_vertices(bp, q), _closed_vertices(bd, q), om.vertices(q)
    if not (_distinct(vp) and _distinct(vd) and _distinct(vo)):
        out.append("vertex-simple: a piece revisits a vertex")
    band = Band(bp.letters + om.letters + bd.letters + om.inverse().letters)
    special = _visited_special(g, band)
    for v in special:
        loop = [special_loop_name(v)]
        ok = (v == x and [z.arrow for z in bp.letters] == loop) or (
            v == y and [z.arrow for z in bd.letters] == loop)
        if not ok:
            out.append(f"vertex-simple: special vertex '{v}' is not a pinch closed by its special loop")
    shared = (set(vp) & set(vo)) | (set(vd) & set(vo)) | (set(vp) & set(vd))
    if shared - {x, y}:
        out.append("disjoint: pieces share a vertex other than the pinches")
    return out


def minimal_violations(g: GentlePair, m: MinimalBand) -> list[str]:
    """Empty iff ``m`` is a band of ``g`` of the stated minimal shape."""
    if not is_band(m.band, g):
        return ["not a band"]
    if m.kind == SIMPLE:
        return simple_violations(g, m.band)
    word = m.bprime.letters + m.omega.letters + m.bdprime.letters + m.omega.inverse().letters
    if word != m.band.letters:
        return ["band does not spell b' omega b'' omega^-1"]
    return pinched_violations(g, m.bprime, m.omega, m.bdprime)


# --- recognising a minimal shape -----------------------------------------------

def _decompositions(g: GentlePair, b: Band):
    """Every reading of a rotation of ``b`` or ``b^-1`` as ``b' omega b'' omega^-1``."""
    q = g.quiver
    n = len(b)
    for word in rotations(b) + rotations(b.inverse()):
        letters = word.letters
        for s in range((n - 2) // 2 + 1):
            for p in range(1, n - 2 * s):
                qlen = n - 2 * s - p
                om = letters[p:p + s]
                tail = letters[p + s + qlen:]
                if tuple(x.inv() for x in reversed(om)) != tail:
                    continue
                bp, bd = Walk(letters[:p]), Walk(letters[p + s:p + s + qlen])
                x = bp.source(q)
                omega = Walk(om) if om else Walk.trivial(x)
                yield word, bp, omega, bd


def recognise(g: GentlePair, b: Band) -> MinimalBand | None:
    """The minimal-band structure of ``b``, or ``None`` if it has neither shape.

    Among pinched readings, one whose first piece ``b'`` sits at a special
    pinch is preferred; ties go to the first reading found.
    """
    q = g.quiver
    if not is_band(b, g):
        return None
    if not simple_violations(g, b):
        return MinimalBand(SIMPLE, canonical_band(b, q))
    found = None
    for word, bp, om, bd in _decompositions(g, b):
        if pinched_violations(g, bp, om, bd):
            continue
        cand = MinimalBand(PINCHED, word, bp, om, bd)
        if [z.arrow for z in bp.letters] == [special_loop_name(om.target(q))]:
            return cand
        if found is None:
            found = cand
    return found


def _search(g: GentlePair, letters: set[Letter] | None) -> MinimalBand | None:
    q = g.quiver
    succ = letter_graph(g)
    graph = nx.DiGraph()
    nodes = [x for x in succ if letters is None or x in letters]
    graph.add_nodes_from(nodes)
    graph.add_edges_from((x, y) for x in nodes for y in succ[x] if y in graph)
    bound = 2 * len(q.vertices) + 2
    best, best_key = None, None
    for cyc in nx.simple_cycles(graph, length_bound=bound):
        # a cycle x_1 -> x_2 -> ... means x_2 follows x_1 as the next letter w_{k+1}
        band = Band(tuple(cyc))
        m = recognise(g, band)
        if m is None:
            continue
        key = (len(band), walk_key(q, canonical_band(band, q).letters))
        if best_key is None or key < best_key:
            best, best_key = m, key
    return best


def minimize_band(p: SkewGentlePresentation, b: Band) -> MinimalBand:
    """A minimal band of ``(Q^sp, I')``, equal to ``b`` when ``b`` is already minimal.

    Otherwise the simple cycles of the letter graph are searched, first among
    letters on the arrows of ``b`` and then everywhere; the shortest minimal
    band wins, ties broken by the canonical word.
    """
    g = build_qsp(p)
    if not is_band(b, g):
        raise PreconditionError(f"'{b}' is not a band of the gentle pair")
    m = recognise(g, b)
    if m is not None:
        return m
    arrows = {x.arrow for x in b.letters}
    m = _search(g, {Letter(a, inv) for a in arrows for inv in (False, True)})
    if m is None:
        m = _search(g, None)
    if m is None:
        raise SkewGentleError(f"no minimal band found although '{b}' is a band")
    return m


# --- quotient ----------------------------------------------------------------------

def quotient_support(p: SkewGentlePresentation, m: MinimalBand) -> SkewGentlePresentation:
    """Vertices and arrows the band goes through; special iff the special loop is used."""
    g = build_qsp(p)
    q = g.quiver
    if minimal_violations(g, m):
        raise PreconditionError("not a minimal band of the presentation")
    used = {x.arrow for x in m.band.letters}
    verts = set(m.band.vertices(q))
    vertices = tuple(v for v in p.quiver.vertices if v in verts)
    arrows = tuple(a for a in p.quiver.arrows if a.name in used)
    relations = tuple(r for r in p.relations if r.second in used and r.first in used)
    special = tuple(v for v in p.special if special_loop_name(v) in used)
    return SkewGentlePresentation(Quiver(vertices, arrows), relations, special)


# --- classification ----------------------------------------------------------------

@dataclass(frozen=True)
class Orientation:
    """Arrow directions of a pinched band, read from the pinch ``x`` to ``y``.

    ``omega`` lists ``(arrow, points_towards_y)`` from ``x`` to ``y``.
    ``cycle`` lists ``(arrow, along)`` around ``b''`` starting at ``y``, with
    the first step on an arrow leaving ``y`` whenever one exists.
    """

    x: str
    y: str
    omega: tuple[tuple[str, bool], ...]
    cycle: tuple[tuple[str, bool], ...]

    @property
    def beta1_towards_x(self) -> bool | None:
        return None if not self.omega else not self.omega[0][1]


@dataclass(frozen=True)
class CaseLabel:
    tag: str
    s: int | None = None
    t: int | None = None
    orientation: Orientation | None = None

    def __str__(self) -> str:
        parts = [self.tag]
        if self.s is not None:
            parts.append(f"s={self.s}")
        if self.t is not None:
            parts.append(f"t={self.t}")
        return " ".join(parts)


def swap_pinches(m: MinimalBand, q: Quiver) -> MinimalBand:
    """Read ``b' omega b'' omega^-1`` as ``b'' omega^-1 b' omega``."""
    y = m.omega.source(q)
    om = m.omega.inverse() if m.omega.letters else Walk.trivial(y)
    band = Band(m.bdprime.letters + om.letters + m.bprime.letters + m.omega.letters)
    return MinimalBand(PINCHED, band, m.bdprime, om, m.bprime)


def _cycle_steps(bd: Walk) -> tuple[tuple[str, bool], ...]:
    """Traverse ``b''`` starting at ``y``, preferring to leave along an arrow."""
    forward = tuple((x.arrow, not x.inverse) for x in reversed(bd.letters))
    backward = tuple((x.arrow, x.inverse) for x in bd.letters)
    return forward if forward[0][1] else backward


def classify_case(p: SkewGentlePresentation, m: MinimalBand) -> CaseLabel:
    g = build_qsp(p)
    q = g.quiver
    if minimal_violations(g, m):
        raise PreconditionError("not a minimal band of the presentation")
    if m.kind == SIMPLE:
        return CaseLabel("ATilde")
    x, y = m.pinches(q)
    special = {v for v in (x, y) if special_loop_name(v) in {z.arrow for z in m.band.letters}}
    s = len(m.omega)
    omega = tuple((z.arrow, z.inverse) for z in m.omega.letters)
    if not special:
        orient = Orientation(x, y, omega, _cycle_steps(m.bdprime))
        return CaseLabel("C2i", s, len(m.bdprime), orient)
    if len(special) == 2:
        if s < 1:
            raise SkewGentleError("two special pinches at one vertex")
        return CaseLabel("C2iii", s, None, Orientation(x, y, omega, ()))
    if [z.arrow for z in m.bprime.letters] != [special_loop_name(x)]:
        m = swap_pinches(m, q)
        x, y = m.pinches(q)
        omega = tuple((z.arrow, z.inverse) for z in m.omega.letters)
    bd = m.bdprime
    t = len(bd)
    if t == 1 and not g.in_relations(bd.letters[0].arrow, bd.letters[0].arrow):
        raise SkewGentleError("a one-arrow cycle must square to zero")
    return CaseLabel("C2ii", s, t, Orientation(x, y, omega, _cycle_steps(bd)))

