"""Explicit infinite brick families, one construction per minimal-band case.

Every family lives on the support quotient of a minimal band, so its members
are also modules over the original algebra. ``realize`` builds the ``n``-th
member and :func:`verify_witness` checks the relations, ``End = k`` and that
different members are pairwise non-isomorphic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import PreconditionError, RepresentationFiniteError, SkewGentleError
from .linrep.field import FieldSpec
from .linrep.modules import band_module
from .linrep.reflection import coxeter_orbit
from .linrep.representation import Representation, end_dim, hom_dim, projective
from .polarization import PolarizedPresentation, polarize
from .presentation import GentlePair, SkewGentlePresentation, build_qsp
from .reduction import CaseLabel, MinimalBand, classify_case, minimize_band, quotient_support
from .strings import Band, Letter, decide_rep_type, is_band

BAND_CASES = ("ATilde", "C2i")


@dataclass(frozen=True)
class BrickFamilyDescriptor:
    """A classified minimal band together with the algebra its family lives on.

    ``ambient`` is the gentle pair of ``quotient`` for the band-module cases
    and its polarization otherwise.
    """

    case: CaseLabel
    minimal: MinimalBand
    quotient: SkewGentlePresentation
    ambient: PolarizedPresentation | GentlePair = dc_field(compare=False)

    @property
    def uses_lambda(self) -> bool:
        return self.case.tag in BAND_CASES or (self.case.tag == "C2ii" and self.case.s == 0)

    def __str__(self) -> str:
        return f"{self.case} band={self.minimal.band}"


def witness_family(p: SkewGentlePresentation) -> BrickFamilyDescriptor:
    rt = decide_rep_type(p)
    if rt.finite:
        raise RepresentationFiniteError()
    m = minimize_band(p, rt.band)
    quotient = quotient_support(p, m)
    case = classify_case(quotient, m)
    if case.tag in BAND_CASES:
        ambient = build_qsp(quotient)
    else:
        ambient = polarize(quotient)
    return BrickFamilyDescriptor(case, m, quotient, ambient)


def family_for(p: SkewGentlePresentation, m: MinimalBand) -> BrickFamilyDescriptor:
    """Descriptor for a given minimal band of ``p`` (no search)."""
    quotient = quotient_support(p, m)
    case = classify_case(quotient, m)
    ambient = build_qsp(quotient) if case.tag in BAND_CASES else polarize(quotient)
    return BrickFamilyDescriptor(case, m, quotient, ambient)


# --- matrices -------------------------------------------------------------------

def _blocks(f: FieldSpec, rows) -> np.ndarray:
    return np.block([[np.asarray(b, dtype=object) for b in row] for row in rows]).astype(object)


def _lam(n: int, f: FieldSpec):
    if f.is_finite and n >= f.characteristic:
        raise PreconditionError(
            f"{f} has only {f.characteristic - 1} nonzero scalars, so member {n} of a "
            "one-parameter family is not available; use Q")
    return f(n)


def _realize_c2ii(d: BrickFamilyDescriptor, n: int, f: FieldSpec) -> Representation:
    pp: PolarizedPresentation = d.ambient
    o = d.case.orientation
    s, t = d.case.s, d.case.t
    dims: dict[str, int] = {}
    maps: dict[str, np.ndarray] = {}
    big = 2 * n + 1
    path = [o.x]
    q = d.quotient.quiver
    for arrow, _ in o.omega:
        a = q.arrow(arrow)
        path.append(a.source if a.target == path[-1] else a.target)
    for v in path[1:]:
        dims[v] = big
    for sign in "+-":
        dims[pp.vertex(o.x, sign)] = n
    ring = [o.y]
    for arrow, along in o.cycle:
        a = q.arrow(arrow)
        ring.append(a.target if along else a.source)
    for z in ring[1:-1]:
        dims[z] = n
    ident, zero = f.identity, f.zeros
    v1 = zero(n, 1)
    v1[0, 0] = f.one
    plus_row = _blocks(f, [[zero(n, n + 1), ident(n)]])
    minus_row = _blocks(f, [[ident(n), ident(n), v1]])
    b1, towards_y = o.omega[0]
    if not towards_y:
        maps[pp.arrow(b1, "+", "o")] = plus_row
        maps[pp.arrow(b1, "-", "o")] = minus_row
    else:
        maps[pp.arrow(b1, "o", "+")] = plus_row.T.copy()
        maps[pp.arrow(b1, "o", "-")] = minus_row.T.copy()
    for arrow, _ in o.omega[1:]:
        maps[arrow] = ident(big)
    leave = _blocks(f, [[ident(n), zero(n, n + 1)]])
    enter = _blocks(f, [[zero(n + 1, n)], [ident(n)]])
    if towards_y:
        # transposing only the maps of b1 leaves End(M_1) three-dimensional; the
        # whole picture has to be dualized, which swaps the two maps at y
        leave, enter = enter.T.copy(), leave.T.copy()
    if t == 1:
        maps[o.cycle[0][0]] = f.matmul(enter, leave)
    else:
        maps[o.cycle[0][0]] = leave
        maps[o.cycle[-1][0]] = enter
        for arrow, _ in o.cycle[1:-1]:
            maps[arrow] = ident(n)
    assert s == len(path) - 1
    return Representation(pp, f, dims, maps)


def _realize_c2ii_lambda(d: BrickFamilyDescriptor, n: int, f: FieldSpec) -> Representation:
    """``x = y`` special: all dimensions 1, the two copies at ``x`` cancel in the relation."""
    pp: PolarizedPresentation = d.ambient
    o = d.case.orientation
    if len(o.cycle) < 3:
        raise SkewGentleError("a cycle through a special vertex needs at least three arrows")
    lam = _lam(n, f)
    dims = {v: 1 for v in pp.quiver.vertices}
    maps = {}
    first, last = o.cycle[0][0], o.cycle[-1][0]
    maps[pp.arrow(first, "o", "+")] = f.matrix([[1]])
    maps[pp.arrow(first, "o", "-")] = f.matrix([[-1]])
    maps[pp.arrow(last, "+", "o")] = f.matrix([[1]])
    maps[pp.arrow(last, "-", "o")] = f.matrix([[1]])
    for k, (arrow, _) in enumerate(o.cycle[1:-1]):
        maps[arrow] = f.matrix([[lam if k == 0 else 1]])
    return Representation(pp, f, dims, maps)


def _realize_c2iii_edge(d: BrickFamilyDescriptor, n: int, f: FieldSpec) -> Representation:
    pp: PolarizedPresentation = d.ambient
    (arrow, _), = d.case.orientation.omega
    a = d.quotient.quiver.arrow(arrow)
    x, y = a.source, a.target
    dims = {pp.vertex(x, "+"): n, pp.vertex(x, "-"): n, pp.vertex(y, "+"): n, pp.vertex(y, "-"): n + 1}
    zero_row = f.zeros(1, n)
    maps = {
        pp.arrow(arrow, "+", "+"): f.identity(n),
        pp.arrow(arrow, "-", "+"): _blocks(f, [[zero_row], [f.identity(n)]]),
        pp.arrow(arrow, "+", "-"): f.identity(n),
        pp.arrow(arrow, "-", "-"): _blocks(f, [[f.identity(n)], [zero_row]]),
    }
    return Representation(pp, f, dims, maps)


def _clash(bp: tuple[Letter, ...], bd: tuple[Letter, ...]) -> bool:
    """Does ``omega`` sit on top at one of its two places in the band and at the bottom at the other?

    The first place is flanked by ``bp[-1]`` and ``bd[0]``, the second (read
    backwards) by ``bd[-1]`` and ``bp[0]``. A clash gives a graph map of the
    band module onto itself that is not a scalar.
    """
    top_a = bp[-1].inverse and not bd[0].inverse
    bottom_a = not bp[-1].inverse and bd[0].inverse
    top_b = bd[-1].inverse and not bp[0].inverse
    bottom_b = not bd[-1].inverse and bp[0].inverse
    return (top_a and bottom_b) or (top_b and bottom_a)


def brick_band(d: BrickFamilyDescriptor) -> Band:
    """The band whose modules form the family.

    For a pinched band the loops ``b'`` and ``b''`` may be run either way; the
    first orientation that is still a band and has no clash at ``omega`` is used.
    """
    m = d.minimal
    if d.case.tag != "C2i":
        return m.band
    om, back = m.omega.letters, m.omega.inverse().letters
    for bp in (m.bprime, m.bprime.inverse()):
        for bd in (m.bdprime, m.bdprime.inverse()):
            band = Band(bp.letters + om + bd.letters + back)
            if is_band(band, d.ambient) and not _clash(bp.letters, bd.letters):
                return band
    raise SkewGentleError(f"no orientation of '{m.band}' avoids a clash at omega")


def orbit_start(d: BrickFamilyDescriptor) -> str:
    """The projective the preprojective family starts from: the first vertex after ``x``."""
    o = d.case.orientation
    a = d.quotient.quiver.arrow(o.omega[0][0])
    return a.source if a.target == o.x else a.target


@functools.lru_cache(maxsize=64)
def _orbit(d: BrickFamilyDescriptor, k: int, f: FieldSpec) -> tuple[Representation, ...]:
    pp = d.ambient
    orbit = coxeter_orbit(pp, projective(pp, orbit_start(d), f), k)
    if orbit.exhausted:
        raise SkewGentleError("preprojective orbit ended on a quiver expected to be of affine type")
    return tuple(orbit.modules)


def realize(d: BrickFamilyDescriptor, n: int, f: FieldSpec) -> Representation:
    """Member ``n >= 1`` of the family of ``d`` over ``f``."""
    if n < 1:
        raise PreconditionError("family members are numbered from 1")
    tag = d.case.tag
    if tag in BAND_CASES:
        return band_module(d.ambient, brick_band(d), _lam(n, f), 1, f)
    if tag == "C2ii":
        return _realize_c2ii_lambda(d, n, f) if d.case.s == 0 else _realize_c2ii(d, n, f)
    if tag == "C2iii":
        if d.case.s == 1:
            return _realize_c2iii_edge(d, n, f)
        return _orbit(d, n, f)[n - 1]
    raise SkewGentleError(f"unknown case {tag}")


# --- verification --------------------------------------------------------------

@dataclass
class Cell:
    n: int
    field: FieldSpec
    end_dim: int | None
    ok: bool
    note: str = ""

    def line(self) -> str:
        d = "NA" if self.end_dim is None else str(self.end_dim)
        status = "ok" if self.ok else "FAIL"
        tail = f" note={self.note}" if self.note else ""
        return f"n={self.n} field={self.field} end_dim={d} status={status}{tail}"


@dataclass
class WitnessReport:
    cells: list[Cell]
    distinct: dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cells) and all(self.distinct.values())

    def format(self) -> str:
        lines = [c.line() for c in self.cells]
        for f, ok in self.distinct.items():
            lines.append(f"distinct field={f} status={'ok' if ok else 'FAIL'}")
        lines.append(f"overall: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def _pairwise_hom_free(mods: list[Representation]) -> bool:
    return all(
        hom_dim(a, b) == 0
        for i, a in enumerate(mods) for j, b in enumerate(mods) if i != j
    )


def verify_witness(d: BrickFamilyDescriptor, n_max: int, fields: list[FieldSpec]) -> WitnessReport:
    """Check members ``1..n_max`` over every field; cells are ordered n-major, field-minor."""
    cells = []
    members: dict[FieldSpec, list[Representation]] = {f: [] for f in fields}
    for n in range(1, n_max + 1):
        for f in fields:
            try:
                m = realize(d, n, f)
            except PreconditionError as exc:
                cells.append(Cell(n, f, None, False, str(exc).split(";")[0].replace(" ", "_")))
                continue
            if not m.check_relations():
                cells.append(Cell(n, f, None, False, "relations"))
                continue
            e = end_dim(m)
            cells.append(Cell(n, f, e, e == 1))
            members[f].append(m)
    distinct = {}
    for f, mods in members.items():
        if len(mods) < 2:
            distinct[str(f)] = True
        elif d.uses_lambda:
            distinct[str(f)] = _pairwise_hom_free(mods)
        else:
            totals = [m.total_dim for m in mods]
            distinct[str(f)] = all(a < b for a, b in zip(totals, totals[1:]))
    return WitnessReport(cells, distinct)
