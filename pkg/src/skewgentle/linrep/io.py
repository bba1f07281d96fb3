"""Text format for representations.

The ambient bound quiver comes first so a file is self-contained::

    vertices: 1 2
    arrows: a: 1 -> 2
    linear-relations:
    field: Q
    dims: 1=1 2=2
    map a: [[1], [2/3]]

Matrices with a zero dimension are written ``[]``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .._textio import Segment, split_sections, tokens
from ..errors import PresentationError
from ..polarization import BOUND_QUIVER_HEADERS, bound_quiver_from_sections, serialize_bound_quiver_lines
from .field import FieldSpec
from .representation import Representation

_MAP = re.compile(r"^\s*map\s+(\S+?)\s*:(.*)$")
_ROW = re.compile(r"\[([^\[\]]*)\]")


def format_matrix(m, field: FieldSpec) -> str:
    if m.size == 0:
        return "[]"
    rows = ("[" + ", ".join(field.format(x) for x in row) + "]" for row in m)
    return "[" + ", ".join(rows) + "]"


def serialize_representation(m: Representation) -> str:
    f = m.field
    lines = serialize_bound_quiver_lines(m.ambient)
    lines.append(f"field: {f}")
    dims = " ".join(f"{v}={d}" for v, d in m.dims.items())
    lines.append(f"dims: {dims}" if dims else "dims:")
    for a in m.quiver.arrows:
        lines.append(f"map {a.name}: {format_matrix(m.maps[a.name], f)}")
    return "\n".join(lines) + "\n"


def _parse_matrix(seg: Segment, shape: tuple[int, int], field: FieldSpec):
    body = seg.text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise seg.error("matrix must be written as [[...], ...]")
    inner = body[1:-1].strip()
    rows = []
    if inner:
        if _ROW.sub("", inner).replace(",", "").strip():
            raise seg.error("unexpected text between matrix rows")
        for m in _ROW.finditer(inner):
            cells = [c.strip() for c in m.group(1).split(",") if c.strip()]
            try:
                rows.append([field(_fraction(c)) for c in cells])
            except (ValueError, ZeroDivisionError):
                raise seg.error(f"bad matrix entry in '{m.group(0)}'") from None
    if shape[0] * shape[1] == 0:
        if rows and any(rows):
            raise seg.error(f"expected an empty matrix of shape {shape}")
        return field.zeros(*shape)
    if len(rows) != shape[0] or any(len(r) != shape[1] for r in rows):
        got = (len(rows), len(rows[0]) if rows else 0)
        raise seg.error(f"matrix has shape {got}, expected {shape}")
    return field.matrix(rows)


def _fraction(text: str) -> Fraction:
    if not re.fullmatch(r"-?\d+(/\d+)?", text):
        raise ValueError(text)
    return Fraction(text)


def parse_representation(text: str) -> Representation:
    lines = text.splitlines()
    maps_raw: dict[str, Segment] = {}
    kept = []
    for lineno, line in enumerate(lines, start=1):
        m = _MAP.match(line.split("#", 1)[0])
        if m:
            name = m.group(1)
            if name in maps_raw:
                raise PresentationError(f"duplicate map for arrow '{name}'", lineno, 1)
            maps_raw[name] = Segment(m.group(2), lineno, m.start(2) + 1)
            kept.append("")
        else:
            kept.append(line)
    headers = BOUND_QUIVER_HEADERS + ("field", "dims")
    sections = split_sections("\n".join(kept), headers, required=("vertices", "arrows", "field", "dims"))
    bq = bound_quiver_from_sections(sections)
    field_toks = tokens(sections["field"][0])
    if len(field_toks) != 1:
        raise PresentationError("the field section takes exactly one token")
    try:
        field = FieldSpec.parse(field_toks[0].text)
    except PresentationError as exc:
        raise field_toks[0].error(str(exc)) from None
    dims: dict[str, int] = {}
    for tok in tokens(sections["dims"][0]):
        v, sep, d = tok.text.rpartition("=")
        if not sep or not d.isdigit():
            raise tok.error(f"malformed dimension '{tok.text}' (expected vertex=d)")
        if v not in bq.quiver.vertex_index:
            raise tok.error(f"unknown vertex '{v}'")
        if v in dims:
            raise tok.error(f"duplicate dimension for '{v}'")
        dims[v] = int(d)
    maps = {}
    for name, seg in maps_raw.items():
        if not bq.quiver.has_arrow(name):
            raise seg.error(f"map given for unknown arrow '{name}'")
        a = bq.quiver.arrow(name)
        maps[name] = _parse_matrix(seg, (dims.get(a.target, 0), dims.get(a.source, 0)), field)
    return Representation(bq, field, dims, maps)
