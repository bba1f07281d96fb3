"""Line-oriented ``header: body`` reader shared by the text formats."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PresentationError

_HEADER = re.compile(r"^(\s*)([A-Za-z][A-Za-z-]*)\s*:")


@dataclass(frozen=True)
class Segment:
    """A piece of section body text with its 1-based source position."""

    text: str
    line: int
    column: int

    def error(self, message: str, offset: int = 0) -> PresentationError:
        return PresentationError(message, self.line, self.column + offset)


def strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def split_sections(
    text: str,
    headers: tuple[str, ...],
    required: tuple[str, ...] = (),
    repeatable: tuple[str, ...] = (),
) -> dict[str, list[list[Segment]]]:
    """Group body text under each recognised header.

    A header line may carry body text after the colon; following lines that
    do not start a new header continue the same section. Each occurrence of a
    repeatable header opens a new block, other headers may appear once.
    """
    sections: dict[str, list[list[Segment]]] = {}
    current: list[Segment] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m and m.group(2) in headers:
            name = m.group(2)
            if name in sections and name not in repeatable:
                raise PresentationError(f"duplicate section '{name}'", lineno, len(m.group(1)) + 1)
            current = []
            sections.setdefault(name, []).append(current)
            body = line[m.end():]
            if body.strip():
                current.append(Segment(body, lineno, m.end() + 1))
            continue
        if m and m.group(2) not in headers and current is None:
            raise PresentationError(f"unknown section '{m.group(2)}'", lineno, len(m.group(1)) + 1)
        if current is None:
            col = len(line) - len(line.lstrip()) + 1
            raise PresentationError("text before the first section header", lineno, col)
        current.append(Segment(line, lineno, 1))
    for name in required:
        if name not in sections:
            raise PresentationError(f"missing required section '{name}'")
    return sections


def tokens(segments: list[Segment]) -> list[Segment]:
    """Whitespace-separated tokens with positions."""
    out = []
    for seg in segments:
        for m in re.finditer(r"\S+", seg.text):
            out.append(Segment(m.group(0), seg.line, seg.column + m.start()))
    return out


def items(segments: list[Segment], sep: str = ";") -> list[Segment]:
    """Non-empty ``sep``-separated items with positions; items never span lines."""
    out = []
    for seg in segments:
        start = 0
        for piece in seg.text.split(sep):
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                out.append(Segment(stripped, seg.line, seg.column + start + lead))
            start += len(piece) + len(sep)
    return out
