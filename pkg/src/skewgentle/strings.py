"""String and band combinatorics on a gentle pair.

A walk ``w_1 w_2 ... w_n`` is read right to left as a composition: the walk
starts at ``s(w_n)`` and ends at ``t(w_1)``, and the end vertex of letter
``k+1`` is the start vertex of letter ``k``. Letters are arrows or formal
inverses; in text form an inverse carries a trailing ``~`` and letters are
joined by dots (``eps_2.b1.eps_1.b1~``). A trivial walk at ``v`` is written
``[v]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, PresentationError
from .presentation import GentlePair, Quiver, SkewGentlePresentation, build_qsp, validate_skew_gentle


@dataclass(frozen=True)
class Letter:
    arrow: str
    inverse: bool = False

    def inv(self) -> Letter:
        return Letter(self.arrow, not self.inverse)

    def __str__(self) -> str:
        return self.arrow + ("~" if self.inverse else "")


def letter_start(q: Quiver, x: Letter) -> str:
    a = q.arrow(x.arrow)
    return a.target if x.inverse else a.source


def letter_end(q: Quiver, x: Letter) -> str:
    a = q.arrow(x.arrow)
    return a.source if x.inverse else a.target


def letter_key(q: Quiver, x: Letter) -> tuple[int, int]:
    """Declaration order of the arrow, forward before inverse."""
    return (q.arrow_index[x.arrow], int(x.inverse))


def all_letters(q: Quiver) -> list[Letter]:
    return [Letter(a.name, inv) for a in q.arrows for inv in (False, True)]


@dataclass(frozen=True)
class Walk:
    letters: tuple[Letter, ...] = ()
    basepoint: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters and self.basepoint is None:
            raise PresentationError("a trivial walk needs a basepoint")

    @classmethod
    def trivial(cls, v: str) -> Walk:
        return cls((), v)

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def source(self, q: Quiver) -> str:
        return self.basepoint if self.is_trivial else letter_start(q, self.letters[-1])

    def target(self, q: Quiver) -> str:
        return self.basepoint if self.is_trivial else letter_end(q, self.letters[0])

    def inverse(self) -> Walk:
        return Walk(tuple(x.inv() for x in reversed(self.letters)), self.basepoint)

    def vertices(self, q: Quiver) -> list[str]:
        """Vertex occurrences ``t(w_1), s(w_1), s(w_2), ..., s(w_n)``."""
        if self.is_trivial:
            return [self.basepoint]
        return [self.target(q)] + [letter_start(q, x) for x in self.letters]

    def __str__(self) -> str:
        if self.is_trivial:
            return f"[{self.basepoint}]"
        return ".".join(str(x) for x in self.letters)


StringWord = Walk


@dataclass(frozen=True)
class Band:
    """A cyclic word; ``letters`` is one chosen rotation."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise PresentationError("a band has at least one letter")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def walk(self) -> Walk:
        return Walk(self.letters)

    def inverse(self) -> Band:
        return Band(tuple(x.inv() for x in reversed(self.letters)))

    def vertices(self, q: Quiver) -> list[str]:
        """Cyclic vertex occurrences; the basepoint ``t(w_1)`` appears once."""
        return self.walk.vertices(q)[:-1]

    def __str__(self) -> str:
        return ".".join(str(x) for x in self.letters)


BandWord = Band


def walk_key(q: Quiver, letters) -> tuple:
    return tuple(letter_key(q, x) for x in letters)


# --- local string conditions ------------------------------------------------

def pair_ok(g: GentlePair, x: Letter, y: Letter) -> bool:
    """Whether ``y`` may follow ``x`` as ``w_{k+1}`` after ``w_k = x``."""
    q = g.quiver
    if letter_end(q, y) != letter_start(q, x):
        return False
    if x.arrow == y.arrow and x.inverse != y.inverse:
        return False
    if not x.inverse and not y.inverse:
        return not g.in_relations(x.arrow, y.arrow)
    if x.inverse and y.inverse:
        return not g.in_relations(y.arrow, x.arrow)
    return True


def is_walk(w: Walk, q: Quiver) -> bool:
    if w.is_trivial:
        return w.basepoint in q.vertex_index
    return all(
        letter_end(q, w.letters[k + 1]) == letter_start(q, w.letters[k])
        for k in range(len(w) - 1)
    )


def is_string(w: Walk, g: GentlePair) -> bool:
    """Reduced and relation-avoiding in both reading directions."""
    if not is_walk(w, g.quiver):
        raise PreconditionError(f"'{w}' is not a walk")
    return all(pair_ok(g, w.letters[k], w.letters[k + 1]) for k in range(len(w) - 1))


def canonical_string(w: Walk, q: Quiver) -> Walk:
    """The representative of ``{w, w^-1}`` that is lexicographically smaller."""
    inv = w.inverse()
    return w if walk_key(q, w.letters) <= walk_key(q, inv.letters) else inv


def enumerate_strings(g: GentlePair, max_len: int) -> list[Walk]:
    """All strings of length at most ``max_len``, one per inverse pair.

    Ordered by length, then lexicographically in declaration order.
    """
    q = g.quiver
    succ = letter_graph(g)
    out = [Walk.trivial(v) for v in q.vertices]
    level = [(x,) for x in all_letters(q)]
    length = 1
    while level and length <= max_len:
        reps = [w for w in level
                if walk_key(q, w) <= walk_key(q, tuple(x.inv() for x in reversed(w)))]
        reps.sort(key=lambda w: walk_key(q, w))
        out.extend(Walk(w) for w in reps)
        if length == max_len:
            break
        level = [w + (y,) for w in level for y in succ[w[-1]]]
        length += 1
    return out


def letter_graph(g: GentlePair) -> dict[Letter, list[Letter]]:
    """``x -> [y, ...]`` where ``y`` may follow ``x``, in letter order."""
    letters = all_letters(g.quiver)
    return {x: [y for y in letters if pair_ok(g, x, y)] for x in letters}


# --- bands -----------------------------------------------------------------

def _unidirectional(letters) -> bool:
    return len({x.inverse for x in letters}) == 1


def primitive_root(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters == letters[:d] * (n // d):
            return letters[:d]
    return letters


def is_band(b: Band, g: GentlePair) -> bool:
    """Every rotation is a string, the word is primitive and not an oriented cycle."""
    letters = b.letters
    if not is_walk(Walk(letters), g.quiver):
        return False
    n = len(letters)
    if not all(pair_ok(g, letters[k], letters[(k + 1) % n]) for k in range(n)):
        return False
    if primitive_root(letters) != letters:
        return False
    return not _unidirectional(letters)


def rotations(b: Band) -> list[Band]:
    return [Band(b.letters[i:] + b.letters[:i]) for i in range(len(b))]


def canonical_band(b: Band, q: Quiver) -> Band:
    """Least rotation of ``b`` or ``b^-1`` in declaration order."""
    cands = rotations(b) + rotations(b.inverse())
    return min(cands, key=lambda c: walk_key(q, c.letters))


def find_band(g: GentlePair) -> Band | None:
    """First band found by depth-first search on the letter graph.

    Roots are tried by the declaration order of ``t(w_1)``, then letter
    order; successors in letter order. The first back edge closing a cycle
    that is not an oriented cycle gives the band, reported in canonical
    rotation. Returns ``None`` when no band exists.
    """
    q = g.quiver
    succ = letter_graph(g)
    roots = sorted(succ, key=lambda x: (q.vertex_index[letter_end(q, x)], letter_key(q, x)))
    state: dict[Letter, int] = {}  # 1 on stack, 2 done
    for root in roots:
        if root in state:
            continue
        stack = [root]
        pos = {root: 0}
        iters = [iter(succ[root])]
        state[root] = 1
        while stack:
            nxt = next(iters[-1], None)
            if nxt is None:
                state[stack.pop()] = 2
                iters.pop()
                continue
            if state.get(nxt) == 1:
                cycle = tuple(stack[pos[nxt]:])
                if not _unidirectional(cycle):
                    return canonical_band(Band(cycle), q)
                continue
            if nxt not in state:
                state[nxt] = 1
                pos[nxt] = len(stack)
                stack.append(nxt)
                iters.append(iter(succ[nxt]))
    return None


# --- string types ----------------------------------------------------------

@dataclass(frozen=True)
class StringType:
    left: str
    right: str

    def __str__(self) -> str:
        return f"({self.left},{self.right})"


def string_type(w: Walk, g: GentlePair, special=None) -> StringType:
    """The ``(r, s)`` type of a string of ``(Q^sp, I')``.

    ``r = p`` iff ``t(w_1)`` is special and ``w_1`` is not a special loop;
    symmetrically for ``s`` with ``w_n``. Trivial strings at a special vertex
    are typed ``(p, p)``.
    """
    special = set(g.special if special is None else special)
    q = g.quiver
    if w.is_trivial:
        t = "p" if w.basepoint in special else "u"
        return StringType(t, t)

    def is_special_loop(x: Letter) -> bool:
        a = q.arrow(x.arrow)
        return a.is_loop and g.is_special_loop(a.name) and a.source in special

    first, last = w.letters[0], w.letters[-1]
    left = "p" if w.target(q) in special and not is_special_loop(first) else "u"
    right = "p" if w.source(q) in special and not is_special_loop(last) else "u"
    return StringType(left, right)


# --- representation type -----------------------------------------------------

@dataclass(frozen=True)
class RepType:
    """``Finite`` when ``band`` is None, otherwise ``Infinite`` with a band witness."""

    band: Band | None
    pair: GentlePair

    @property
    def finite(self) -> bool:
        return self.band is None

    @property
    def verdict(self) -> str:
        return "Finite" if self.finite else "Infinite"


def decide_rep_type(p: SkewGentlePresentation) -> RepType:
    """Representation type of the skew-gentle algebra presented by ``p``.

    Infinite iff the gentle pair ``(Q^sp, I')`` has a band: a ``(p,p)``-string
    ``x`` already yields the band ``x^-1 eps_t(x) x eps_s(x)`` there.
    """
    report = validate_skew_gentle(p)
    if not report.passed:
        raise PreconditionError("not a valid skew-gentle presentation:\n" + report.format())
    pair = build_qsp(p)
    return RepType(find_band(pair), pair)


# --- text syntax -----------------------------------------------------------

def parse_letters(text: str, q: Quiver) -> tuple[Letter, ...]:
    out = []
    for tok in text.strip().split("."):
        inv = tok.endswith("~")
        name = tok[:-1] if inv else tok
        if not q.has_arrow(name):
            raise PresentationError(f"unknown arrow '{name}' in word '{text}'")
        out.append(Letter(name, inv))
    return tuple(out)


def parse_walk(text: str, q: Quiver) -> Walk:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        v = text[1:-1]
        if v not in q.vertex_index:
            raise PresentationError(f"unknown vertex '{v}'")
        return Walk.trivial(v)
    w = Walk(parse_letters(text, q))
    if not is_walk(w, q):
        raise PresentationError(f"'{text}' is not a walk")
    return w


def parse_band(text: str, q: Quiver) -> Band:
    return Band(parse_letters(text, q))
