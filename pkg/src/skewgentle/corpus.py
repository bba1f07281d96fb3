"""Named fixtures and a seeded generator of random skew-gentle presentations."""

from __future__ import annotations

import itertools
import random

from .presentation import (
    Arrow,
    MonomialRelation,
    Quiver,
    SkewGentlePresentation,
    special_loop_name,
    validate_skew_gentle,
)


def _pres(vertices, arrows, relations=(), special=()) -> SkewGentlePresentation:
    q = Quiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    rels = tuple(MonomialRelation(*r) for r in relations)
    return SkewGentlePresentation(q, rels, tuple(special))


def linear(n: int) -> SkewGentlePresentation:
    """``1 -> 2 -> ... -> n`` without relations."""
    vs = [str(i) for i in range(1, n + 1)]
    return _pres(vs, [(f"a{i}", vs[i - 1], vs[i]) for i in range(1, n)])


def kronecker() -> SkewGentlePresentation:
    return _pres(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])


def cycle(orientation: str) -> SkewGentlePresentation:
    """An unoriented cycle; ``orientation[i]`` is ``>`` for ``i -> i+1`` and ``<`` otherwise.

    At least one of each symbol keeps the cycle from being oriented.
    """
    n = len(orientation)
    vs = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i, c in enumerate(orientation):
        a, b = vs[i], vs[(i + 1) % n]
        arrows.append((f"c{i + 1}", a, b) if c == ">" else (f"c{i + 1}", b, a))
    return _pres(vs, arrows)


def dtilde4() -> SkewGentlePresentation:
    """Four sources pointing at one sink (hereditary, not gentle: the sink has in-degree 4)."""
    return _pres(["0", "1", "2", "3", "4"], [(f"a{i}", str(i), "0") for i in range(1, 5)])


def one_special_edge() -> SkewGentlePresentation:
    """One arrow between two special vertices: the smallest case with two special pinches."""
    return _pres(["1", "2"], [("b1", "1", "2")], special=["1", "2"])


def special_path(s: int) -> SkewGentlePresentation:
    """``1 -> 2 -> ... -> s+1`` with both ends special."""
    vs = [str(i) for i in range(1, s + 2)]
    arrows = [(f"b{i}", vs[i - 1], vs[i]) for i in range(1, s + 1)]
    return _pres(vs, arrows, special=[vs[0], vs[-1]])


def loop_and_cycle(s: int, t: int, towards: bool = True) -> SkewGentlePresentation:
    """Special vertex ``1``, a path ``b1..bs`` to ``y = s+1`` and a ``t``-cycle at ``y``.

    ``b1`` points at ``1`` when ``towards`` holds, the other path arrows point
    away from it. The cycle ``y -> c1 -> ... -> y`` carries the one relation
    at ``y``; for ``t = 1`` it is a loop squaring to zero.
    """
    if s < 1 or t < 1:
        raise ValueError("need s >= 1 and t >= 1")
    vs = [str(i) for i in range(1, s + 2)]
    y = vs[-1]
    cs = [f"c{i}" for i in range(1, t)]
    arrows = [("b1", vs[1], vs[0]) if towards else ("b1", vs[0], vs[1])]
    arrows += [(f"b{i}", vs[i - 1], vs[i]) for i in range(2, s + 1)]
    ring = [y] + cs + [y]
    arrows += [(f"g{i}", ring[i - 1], ring[i]) for i in range(1, t + 1)]
    return _pres(vs + cs, arrows, [("g1", f"g{t}")], special=[vs[0]])


def padded_loop_and_cycle(s: int, t: int, towards: bool = True) -> SkewGentlePresentation:
    """:func:`loop_and_cycle` plus a pendant arrow off the cycle that no minimal band needs."""
    if t < 2:
        raise ValueError("the pendant hangs off c1, so t >= 2")
    base = loop_and_cycle(s, t, towards)
    q = base.quiver
    quiver = Quiver(q.vertices + ("p",), q.arrows + (Arrow("pd", "c1", "p"),))
    rels = base.relations + (MonomialRelation("pd", "g1"),)
    return SkewGentlePresentation(quiver, rels, base.special)


def _ring(prefix: str, base: str, orientation: str):
    if not orientation or orientation[0] != ">" or orientation[-1] != ">":
        raise ValueError("a cycle must leave and re-enter its base along arrows ('>' at both ends)")
    inner = [f"{prefix}{i}" for i in range(1, len(orientation))]
    ring = [base] + inner + [base]
    arrows = []
    for i, c in enumerate(orientation, start=1):
        a, b = ring[i - 1], ring[i]
        arrows.append((f"{prefix}a{i}", a, b) if c == ">" else (f"{prefix}a{i}", b, a))
    return inner, arrows, (arrows[0][0], arrows[-1][0])


def pinched_cycles(left: str, path: str, right: str) -> SkewGentlePresentation:
    """Two cycles joined by a path, no special vertices.

    ``x`` carries the cycle ``left`` and ``y`` the cycle ``right``; both are
    written like :func:`cycle` starting at their base and must leave and
    re-enter it along arrows, with the relation killing the way through the
    base. ``path`` orients the arrows ``x = p0 - p1 - ... - y``.
    """
    ps = ["x"] + [f"p{i}" for i in range(1, len(path))] + ["y"]
    arrows = [(f"w{i}", ps[i - 1], ps[i]) if c == ">" else (f"w{i}", ps[i], ps[i - 1])
              for i, c in enumerate(path, start=1)]
    if not path:
        ps = ["x"]
    vs = list(ps)
    rels = []
    for prefix, base, orient in (("u", ps[0], left), ("v", ps[-1], right)):
        inner, ring, (first, last) = _ring(prefix, base, orient)
        vs += inner
        arrows += ring
        rels.append((first, last))
    return _pres(vs, arrows, rels)


def figure_eight() -> SkewGentlePresentation:
    """Two unoriented triangles glued at the ordinary vertex ``v``, a relation on each side."""
    arrows = [
        ("a1", "v", "u1"), ("a2", "u2", "u1"), ("a3", "u2", "v"),
        ("d1", "v", "w1"), ("d2", "w2", "w1"), ("d3", "w2", "v"),
    ]
    return _pres(["v", "u1", "u2", "w1", "w2"], arrows, [("a1", "a3"), ("d1", "d3")])


def special_triangle() -> SkewGentlePresentation:
    """An unoriented triangle through a special vertex: the loop and the cycle meet there."""
    arrows = [("a1", "x", "u1"), ("a2", "u2", "u1"), ("a3", "u2", "x")]
    return _pres(["x", "u1", "u2"], arrows, [("a1", "a3")], special=["x"])


FIXTURES = {
    "A3": lambda: linear(3),
    "kronecker": kronecker,
    "atilde2": lambda: cycle(">><"),
    "atilde3": lambda: cycle(">><<"),
    "special-edge": one_special_edge,
    "special-path-2": lambda: special_path(2),
    "special-path-3": lambda: special_path(3),
    "loop-cycle-2-3": lambda: loop_and_cycle(2, 3),
    "figure-eight": figure_eight,
    "special-triangle": special_triangle,
}


# --- random presentations ----------------------------------------------------------

def _local_patterns(n_in: int, n_out: int):
    """All admissible relation patterns at a vertex as sets of (in, out) index pairs."""
    cells = [(i, j) for i in range(n_in) for j in range(n_out)]
    out = []
    for bits in itertools.product((0, 1), repeat=len(cells)):
        rel = {c for c, b in zip(cells, bits) if b}
        ok = True
        for i in range(n_in):
            row = [(i, j) in rel for j in range(n_out)]
            ok &= row.count(True) <= 1 and row.count(False) <= 1
        for j in range(n_out):
            col = [(i, j) in rel for i in range(n_in)]
            ok &= col.count(True) <= 1 and col.count(False) <= 1
        if ok:
            out.append(rel)
    return out


def random_presentation(rng: random.Random, max_vertices: int = 5, max_arrows: int = 7,
                        attempts: int = 200) -> SkewGentlePresentation | None:
    """One random presentation passing validation, or ``None`` after ``attempts`` tries."""
    for _ in range(attempts):
        n = rng.randint(1, max_vertices)
        vs = [str(i) for i in range(1, n + 1)]
        special = [v for v in vs if rng.random() < 0.3]
        indeg = {v: int(v in special) for v in vs}
        outdeg = dict(indeg)
        arrows = []
        for k in range(rng.randint(0, max_arrows)):
            a, b = rng.choice(vs), rng.choice(vs)
            if a == b and a in special:
                continue
            if outdeg[a] >= 2 or indeg[b] >= 2 or (a == b and (outdeg[a] >= 1 or indeg[a] >= 1)):
                continue
            outdeg[a] += 1
            indeg[b] += 1
            arrows.append((f"x{k}", a, b))
        rels = []
        ok = True
        for v in vs:
            ins = [name for name, _, t in arrows if t == v]
            outs = [name for name, s, _ in arrows if s == v]
            if v in special:
                ins.insert(0, special_loop_name(v))
                outs.insert(0, special_loop_name(v))
            pats = [p for p in _local_patterns(len(ins), len(outs))
                    if v not in special or (0, 0) in p]
            if not pats:
                ok = False
                break
            pat = rng.choice(pats)
            rels += [(outs[j], ins[i]) for i, j in sorted(pat) if not (v in special and (i, j) == (0, 0))]
        if not ok:
            continue
        try:
            p = _pres(vs, arrows, rels, special)
        except ValueError:
            continue
        if validate_skew_gentle(p).passed:
            return p
    return None


def random_corpus(count: int, seed: int = 0, **kwargs) -> list[SkewGentlePresentation]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = random_presentation(rng, **kwargs)
        if p is not None:
            out.append(p)
    return out
