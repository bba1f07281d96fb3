"""Quivers with monomial length-two relations and skew-gentle presentations.

A skew-gentle presentation is the triple ``(Q, I, S_p)``: a quiver, a set of
length-two monomial relations and a set of special vertices. The special
loops ``eps_<v>`` and their square-zero relations are always synthesized by
:func:`build_qsp`; they never appear in user input.
"""

from __future__ import annotations

import graphlib
import re
from dataclasses import dataclass, field
from functools import cached_property

from ._textio import items, split_sections, tokens
from .errors import PresentationError

SPECIAL_LOOP_PREFIX = "eps_"


def special_loop_name(vertex: str) -> str:
    return f"{SPECIAL_LOOP_PREFIX}{vertex}"


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    """Finite quiver; declaration order is kept for all deterministic iteration."""

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(self.arrows))
        seen = set()
        for v in self.vertices:
            if not v or any(ch.isspace() for ch in v):
                raise PresentationError(f"invalid vertex identifier {v!r}")
            if v in seen:
                raise PresentationError(f"duplicate vertex '{v}'")
            seen.add(v)
        names = set()
        for a in self.arrows:
            if a.name in names:
                raise PresentationError(f"duplicate arrow '{a.name}'")
            names.add(a.name)
            for end in (a.source, a.target):
                if end not in seen:
                    raise PresentationError(f"arrow '{a.name}' uses undeclared vertex '{end}'")

    @cached_property
    def _arrow_map(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict[str, int]:
        return {a.name: i for i, a in enumerate(self.arrows)}

    def arrow(self, name: str) -> Arrow:
        try:
            return self._arrow_map[name]
        except KeyError:
            raise PresentationError(f"unknown arrow '{name}'") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._arrow_map

    def arrows_out(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_in(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def neighbours(self, v: str) -> list[str]:
        """Adjacent vertices in the underlying graph, with multiplicity."""
        out = []
        for a in self.arrows:
            if a.source == v:
                out.append(a.target)
            if a.target == v:
                out.append(a.source)
        return out


@dataclass(frozen=True)
class MonomialRelation:
    """The length-two path ``first`` then ``second``, written ``second*first``."""

    second: str
    first: str

    def __str__(self) -> str:
        return f"{self.second}*{self.first}"


def check_composable(quiver: Quiver, relations) -> tuple[MonomialRelation, ...]:
    rels = tuple(relations)
    seen = set()
    for r in rels:
        if r in seen:
            raise PresentationError(f"duplicate relation '{r}'")
        seen.add(r)
        first, second = quiver.arrow(r.first), quiver.arrow(r.second)
        if first.target != second.source:
            raise PresentationError(
                f"relation '{r}' is not composable: target of '{first.name}' is "
                f"'{first.target}' but source of '{second.name}' is '{second.source}'"
            )
    return rels


@dataclass(frozen=True)
class SkewGentlePresentation:
    """The user-facing data ``(Q, I, S_p)``."""

    quiver: Quiver
    relations: tuple[MonomialRelation, ...] = ()
    special: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", check_composable(self.quiver, self.relations))
        object.__setattr__(self, "special", tuple(self.special))
        if len(set(self.special)) != len(self.special):
            raise PresentationError("duplicate special vertex")
        for v in self.special:
            if v not in self.quiver.vertex_index:
                raise PresentationError(f"special vertex '{v}' is not a declared vertex")
        reserved = {special_loop_name(v) for v in self.quiver.vertices}
        for a in self.quiver.arrows:
            if a.name in reserved:
                raise PresentationError(
                    f"arrow name '{a.name}' is reserved for synthesized special loops"
                )

    def is_special(self, v: str) -> bool:
        return v in self.special


@dataclass(frozen=True)
class GentlePair:
    """A quiver with monomial relations, typically ``(Q^sp, I')``.

    ``special`` lists the vertices whose synthesized loop ``eps_<v>`` is part
    of the quiver; it is empty for a plain gentle pair.
    """

    quiver: Quiver
    relations: tuple[MonomialRelation, ...] = ()
    special: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", check_composable(self.quiver, self.relations))
        object.__setattr__(self, "special", tuple(self.special))

    @cached_property
    def relation_set(self) -> frozenset[tuple[str, str]]:
        return frozenset((r.second, r.first) for r in self.relations)

    def in_relations(self, second: str, first: str) -> bool:
        return (second, first) in self.relation_set

    @cached_property
    def special_loops(self) -> dict[str, str]:
        """Synthesized loop name -> its vertex."""
        return {special_loop_name(v): v for v in self.special}

    def is_special_loop(self, arrow: str) -> bool:
        return arrow in self.special_loops


@dataclass(frozen=True)
class Violation:
    condition: str
    witnesses: tuple[str, ...]
    message: str
    clause: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def format(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        for v in self.violations:
            clause = f" clause={v.clause}" if v.clause is not None else ""
            lines.append(
                f"violation: {v.condition}{clause} witnesses={','.join(v.witnesses)} :: {v.message}"
            )
        return "\n".join(lines) + "\n"


def validate_gentle(quiver: Quiver, relations) -> ValidationReport:
    """Check the three gentle conditions (degree bound, unique continuation, unique relation)."""
    rels = check_composable(quiver, relations)
    rel_set = {(r.second, r.first) for r in rels}
    violations = []
    for v in quiver.vertices:
        n_out, n_in = len(quiver.arrows_out(v)), len(quiver.arrows_in(v))
        if n_out > 2:
            violations.append(Violation("G1", (v,), f"vertex '{v}' is the source of {n_out} arrows"))
        if n_in > 2:
            violations.append(Violation("G1", (v,), f"vertex '{v}' is the target of {n_in} arrows"))
    for a in quiver.arrows:
        after = quiver.arrows_out(a.target)
        before = quiver.arrows_in(a.source)
        free_after = [b.name for b in after if (b.name, a.name) not in rel_set]
        rel_after = [b.name for b in after if (b.name, a.name) in rel_set]
        free_before = [c.name for c in before if (a.name, c.name) not in rel_set]
        rel_before = [c.name for c in before if (a.name, c.name) in rel_set]
        if len(free_after) > 1:
            violations.append(Violation(
                "G2", (a.name, *free_after),
                f"arrow '{a.name}' has {len(free_after)} continuations outside the ideal"))
        if len(free_before) > 1:
            violations.append(Violation(
                "G2", (a.name, *free_before),
                f"arrow '{a.name}' has {len(free_before)} predecessors outside the ideal"))
        if len(rel_after) > 1:
            violations.append(Violation(
                "G3", (a.name, *rel_after),
                f"arrow '{a.name}' has {len(rel_after)} continuations inside the ideal"))
        if len(rel_before) > 1:
            violations.append(Violation(
                "G3", (a.name, *rel_before),
                f"arrow '{a.name}' has {len(rel_before)} predecessors inside the ideal"))
    return ValidationReport(tuple(violations))


def build_qsp(p: SkewGentlePresentation) -> GentlePair:
    """Add a loop ``eps_i`` with ``eps_i*eps_i`` in the ideal at every special vertex."""
    loops = tuple(Arrow(special_loop_name(v), v, v) for v in p.special)
    quiver = Quiver(p.quiver.vertices, p.quiver.arrows + loops)
    squares = tuple(MonomialRelation(a.name, a.name) for a in loops)
    return GentlePair(quiver, p.relations + squares, p.special)


def relation_free_cycle(pair: GentlePair) -> list[str] | None:
    """An oriented cycle of arrows none of whose consecutive pairs lies in the ideal."""
    q = pair.quiver
    graph = {a.name: set() for a in q.arrows}
    for a in q.arrows:
        for b in q.arrows_out(a.target):
            if not pair.in_relations(b.name, a.name):
                # b follows a; TopologicalSorter wants predecessors
                graph[b.name].add(a.name)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        return list(exc.args[1])
    return None


def validate_skew_gentle(p: SkewGentlePresentation) -> ValidationReport:
    """Validate ``p`` as a skew-gentle presentation.

    Gentleness of the synthesized pair ``(Q^sp, I')`` is delegated to
    :func:`validate_gentle`; finite-dimensionality is checked on the same pair
    because the ideal with ``eps_i^2 - e_i`` is not admissible.
    """
    pair = build_qsp(p)
    gentle = validate_gentle(pair.quiver, pair.relations)
    violations = [
        Violation(v.condition, v.witnesses, v.message + " (after special-loop synthesis)", 4)
        for v in gentle.violations
    ]
    cycle = relation_free_cycle(pair)
    if cycle is not None:
        violations.append(Violation(
            "FD", tuple(dict.fromkeys(cycle)),
            "relation-free oriented cycle: the algebra is infinite-dimensional", 3))
    return ValidationReport(tuple(violations))


# --- text format -----------------------------------------------------------

_ARROW = re.compile(r"^([^\s:;*]+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_RELATION = re.compile(r"^([^\s:;*]+)\s*\*\s*([^\s:;*]+)$")

HEADERS = ("vertices", "arrows", "relations", "special")


def _parse_quiver(sections) -> Quiver:
    vertex_tokens = tokens(sections["vertices"][0])
    vertices: list[str] = []
    seen: set[str] = set()
    for tok in vertex_tokens:
        if tok.text in seen:
            raise tok.error(f"duplicate vertex '{tok.text}'")
        seen.add(tok.text)
        vertices.append(tok.text)
    arrows: list[Arrow] = []
    names: set[str] = set()
    for item in items(sections["arrows"][0]):
        m = _ARROW.match(item.text)
        if not m:
            raise item.error(f"malformed arrow declaration '{item.text}' (expected 'name: src -> tgt')")
        name, src, tgt = m.groups()
        if name in names:
            raise item.error(f"duplicate arrow '{name}'")
        for end, group in ((src, 2), (tgt, 3)):
            if end not in seen:
                raise item.error(f"arrow '{name}' uses undeclared vertex '{end}'", m.start(group))
        names.add(name)
        arrows.append(Arrow(name, src, tgt))
    return Quiver(tuple(vertices), tuple(arrows))


def _parse_relations(segments, quiver: Quiver) -> tuple[MonomialRelation, ...]:
    rels: list[MonomialRelation] = []
    for item in items(segments):
        m = _RELATION.match(item.text)
        if not m:
            raise item.error(f"malformed relation '{item.text}' (expected 'b*a')")
        second, first = m.groups()
        for name, group in ((second, 1), (first, 2)):
            if not quiver.has_arrow(name):
                raise item.error(f"relation uses unknown arrow '{name}'", m.start(group))
        a, b = quiver.arrow(first), quiver.arrow(second)
        if a.target != b.source:
            raise item.error(
                f"relation '{item.text}' is not composable: '{first}' ends at '{a.target}', "
                f"'{second}' starts at '{b.source}'")
        rel = MonomialRelation(second, first)
        if rel in rels:
            raise item.error(f"duplicate relation '{item.text}'")
        rels.append(rel)
    return tuple(rels)


def parse_presentation(text: str) -> SkewGentlePresentation:
    """Parse the four-section presentation format.

    >>> p = parse_presentation("vertices: 1 2\\narrows: a: 1 -> 2\\nrelations:\\nspecial:")
    >>> len(p.quiver.arrows), p.relations, p.special
    (1, (), ())
    """
    sections = split_sections(text, HEADERS, required=HEADERS)
    quiver = _parse_quiver(sections)
    relations = _parse_relations(sections["relations"][0], quiver)
    special: list[str] = []
    for tok in tokens(sections["special"][0]):
        if tok.text not in quiver.vertex_index:
            raise tok.error(f"special vertex '{tok.text}' is not a declared vertex")
        if tok.text in special:
            raise tok.error(f"duplicate special vertex '{tok.text}'")
        special.append(tok.text)
    return SkewGentlePresentation(quiver, relations, tuple(special))


def _line(header: str, body: str) -> str:
    return f"{header}: {body}" if body else f"{header}:"


def serialize_quiver_lines(quiver: Quiver) -> list[str]:
    return [
        _line("vertices", " ".join(quiver.vertices)),
        _line("arrows", " ; ".join(f"{a.name}: {a.source} -> {a.target}" for a in quiver.arrows)),
    ]


def serialize_presentation(p: SkewGentlePresentation) -> str:
    lines = serialize_quiver_lines(p.quiver)
    lines.append(_line("relations", " ; ".join(str(r) for r in p.relations)))
    lines.append(_line("special", " ".join(p.special)))
    return "\n".join(lines) + "\n"
