"""The quiver ``Q~`` and admissible ideal ``I~`` with ``A = kQ~/I~``.

Every special vertex ``i`` splits into ``i+`` and ``i-``; ordinary vertices
keep their name (sign ``o``, omitted). An arrow ``a: i -> j`` becomes the
arrows ``<tau>a<sigma>`` for ``tau`` a sign of ``j`` and ``sigma`` a sign of
``i`` (target sign on the left, source sign on the right, ``o`` omitted).
Special loops produce no arrows. A relation ``a*b`` of ``I`` becomes, for
each ``tau`` at ``t(a)`` and ``rho`` at ``s(b)``, the sum over the signs
``sigma`` of the middle vertex of ``<tau>a<sigma> * <sigma>b<rho>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._textio import items, split_sections
from .errors import PreconditionError, PresentationError
from .presentation import (
    Arrow,
    MonomialRelation,
    Quiver,
    SkewGentlePresentation,
    _parse_quiver,
    _parse_relations,
    serialize_quiver_lines,
    validate_skew_gentle,
)

SIGNS_SPECIAL = ("+", "-")
SIGN_ORDINARY = "o"
_SIGN_ORDER = {"+": 0, "-": 1, "o": 2}


@dataclass(frozen=True)
class SignedVertex:
    base: str
    sign: str

    @property
    def name(self) -> str:
        return self.base if self.sign == SIGN_ORDINARY else f"{self.base}{self.sign}"


@dataclass(frozen=True)
class SignedArrow:
    base: str
    source: SignedVertex
    target: SignedVertex

    @property
    def source_sign(self) -> str:
        return self.source.sign

    @property
    def target_sign(self) -> str:
        return self.target.sign

    @property
    def name(self) -> str:
        tau = "" if self.target.sign == SIGN_ORDINARY else self.target.sign
        sigma = "" if self.source.sign == SIGN_ORDINARY else self.source.sign
        return f"{tau}{self.base}{sigma}"


@dataclass(frozen=True)
class LinearRelation:
    """``sum_k c_k * (second_k after first_k)`` with parallel paths.

    ``terms`` holds ``(coefficient, second, first)`` with arrow names.
    """

    terms: tuple[tuple[Fraction, str, str], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple((Fraction(c), s, f) for c, s, f in self.terms))
        if not self.terms:
            raise PresentationError("a linear relation needs at least one term")
        if any(c == 0 for c, _, _ in self.terms):
            raise PresentationError("linear relation coefficients must be nonzero")

    @classmethod
    def monomial(cls, r: MonomialRelation) -> LinearRelation:
        return cls(((Fraction(1), r.second, r.first),))

    def check_parallel(self, q: Quiver) -> None:
        ends = set()
        for _, second, first in self.terms:
            a, b = q.arrow(first), q.arrow(second)
            if a.target != b.source:
                raise PresentationError(f"path '{second}*{first}' is not composable")
            ends.add((a.source, b.target))
        if len(ends) != 1:
            raise PresentationError(f"relation '{self}' mixes non-parallel paths")

    def __str__(self) -> str:
        return " + ".join(f"{_fmt_coeff(c)}*{s}*{f}" for c, s, f in self.terms)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver together with linear length-two relations."""

    quiver: Quiver
    relations: tuple[LinearRelation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            r.check_parallel(self.quiver)

    @property
    def hereditary(self) -> bool:
        return not self.relations


@dataclass(frozen=True)
class PolarizedPresentation(BoundQuiver):
    """``(Q~, I~)`` with the sign data of every vertex and arrow."""

    signed_vertices: tuple[SignedVertex, ...] = ()
    signed_arrows: tuple[SignedArrow, ...] = ()

    @cached_property
    def vertex_of(self) -> dict[tuple[str, str], str]:
        return {(v.base, v.sign): v.name for v in self.signed_vertices}

    @cached_property
    def arrow_of(self) -> dict[tuple[str, str, str], str]:
        """``(base, target sign, source sign) -> arrow name``."""
        return {(a.base, a.target_sign, a.source_sign): a.name for a in self.signed_arrows}

    def vertex(self, base: str, sign: str = SIGN_ORDINARY) -> str:
        return self.vertex_of[(base, sign)]

    def arrow(self, base: str, target_sign: str = SIGN_ORDINARY, source_sign: str = SIGN_ORDINARY) -> str:
        return self.arrow_of[(base, target_sign, source_sign)]


def signs(p: SkewGentlePresentation, v: str) -> tuple[str, ...]:
    return SIGNS_SPECIAL if p.is_special(v) else (SIGN_ORDINARY,)


def arrow_fibers(p: SkewGentlePresentation, alpha: str) -> list[SignedArrow]:
    """The 1, 2 or 4 signed copies of an arrow of ``Q``.

    Ordered by target sign, then source sign (``+`` before ``-`` before ``o``).
    """
    if not p.quiver.has_arrow(alpha):
        raise PreconditionError(
            f"'{alpha}' is not an arrow of Q (special loops have no fibers)")
    a = p.quiver.arrow(alpha)
    out = [
        SignedArrow(a.name, SignedVertex(a.source, sigma), SignedVertex(a.target, tau))
        for tau in signs(p, a.target)
        for sigma in signs(p, a.source)
    ]
    out.sort(key=lambda x: (_SIGN_ORDER[x.target_sign], _SIGN_ORDER[x.source_sign]))
    return out


def relation_image(p: SkewGentlePresentation, r: MonomialRelation) -> list[LinearRelation]:
    """Generators of ``I~`` coming from the relation ``r = alpha*beta``."""
    if r not in p.relations:
        raise PreconditionError(f"'{r}' is not a relation of the presentation")
    alpha, beta = p.quiver.arrow(r.second), p.quiver.arrow(r.first)

    def name(a: Arrow, tau: str, sigma: str) -> str:
        return SignedArrow(a.name, SignedVertex(a.source, sigma), SignedVertex(a.target, tau)).name

    out = []
    for tau in signs(p, alpha.target):
        for rho in signs(p, beta.source):
            terms = tuple(
                (Fraction(1), name(alpha, tau, sigma), name(beta, sigma, rho))
                for sigma in signs(p, beta.target)
            )
            out.append(LinearRelation(terms))
    return out


def polarize(p: SkewGentlePresentation) -> PolarizedPresentation:
    report = validate_skew_gentle(p)
    if not report.passed:
        raise PreconditionError("not a valid skew-gentle presentation:\n" + report.format())
    svs = tuple(SignedVertex(v, s) for v in p.quiver.vertices for s in signs(p, v))
    names = [v.name for v in svs]
    if len(set(names)) != len(names):
        raise PresentationError("signed vertex names collide with ordinary vertex names")
    sas = tuple(x for a in p.quiver.arrows for x in arrow_fibers(p, a.name))
    quiver = Quiver(
        tuple(names),
        tuple(Arrow(x.name, x.source.name, x.target.name) for x in sas),
    )
    relations = tuple(lr for r in p.relations for lr in relation_image(p, r))
    return PolarizedPresentation(quiver, relations, svs, sas)


# --- text format -----------------------------------------------------------

_TERM = re.compile(r"^(-?\d+(?:/\d+)?)\s*\*\s*([^\s*]+)\s*\*\s*([^\s*]+)$")


def serialize_bound_quiver_lines(bq: BoundQuiver) -> list[str]:
    lines = serialize_quiver_lines(bq.quiver)
    body = " ; ".join(str(r) for r in bq.relations)
    lines.append(f"linear-relations: {body}" if body else "linear-relations:")
    return lines


def serialize_polarized(pp: PolarizedPresentation) -> str:
    """Presentation format with empty monomial sections plus ``linear-relations``."""
    lines = serialize_quiver_lines(pp.quiver) + ["relations:", "special:"]
    lines.append(serialize_bound_quiver_lines(pp)[-1])
    return "\n".join(lines) + "\n"


def parse_linear_relations(segments, quiver: Quiver) -> tuple[LinearRelation, ...]:
    rels = []
    for item in items(segments):
        terms = []
        # terms are joined by " + "; arrow names may themselves contain '+'
        for raw in re.split(r"\s\+\s", item.text):
            m = _TERM.match(raw.strip())
            if not m:
                raise item.error(f"malformed linear relation term '{raw.strip()}'")
            coeff, second, first = m.groups()
            for name in (second, first):
                if not quiver.has_arrow(name):
                    raise item.error(f"unknown arrow '{name}' in linear relation")
            terms.append((Fraction(coeff), second, first))
        try:
            rel = LinearRelation(tuple(terms))
            rel.check_parallel(quiver)
        except PresentationError as exc:
            raise item.error(str(exc)) from None
        rels.append(rel)
    return tuple(rels)


BOUND_QUIVER_HEADERS = ("vertices", "arrows", "relations", "special", "linear-relations")


def parse_bound_quiver(text: str) -> BoundQuiver:
    """Read ``vertices``/``arrows``/``linear-relations`` (monomial sections allowed too)."""
    sections = split_sections(text, BOUND_QUIVER_HEADERS, required=("vertices", "arrows"))
    return bound_quiver_from_sections(sections)


def bound_quiver_from_sections(sections) -> BoundQuiver:
    quiver = _parse_quiver(sections)
    rels = list(parse_linear_relations(sections.get("linear-relations", [[]])[0], quiver))
    if sections.get("special", [[]])[0]:
        raise PresentationError("a bound quiver has no special vertices; polarize first")
    rels.extend(LinearRelation.monomial(r)
                for r in _parse_relations(sections.get("relations", [[]])[0], quiver))
    return BoundQuiver(quiver, tuple(rels))
