import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import pres
from skewgentle import build_qsp, corpus, decide_rep_type, enumerate_strings, find_band, rotations
from skewgentle.presentation import Arrow, MonomialRelation, Quiver, SkewGentlePresentation
from skewgentle.strings import (
    Band,
    Letter,
    Walk,
    canonical_string,
    is_band,
    is_string,
    parse_band,
    parse_walk,
    string_type,
)


# --- an independent oracle: every letter sequence, filtered by hand-written rules

def _ends(q, x):
    a = q.arrow(x.arrow)
    return (a.target, a.source) if x.inverse else (a.source, a.target)


def _oracle_is_string(letters, g):
    q = g.quiver
    rel = {(r.second, r.first) for r in g.relations}
    for left, right in zip(letters, letters[1:]):
        # ``left`` is applied after ``right``
        if _ends(q, right)[1] != _ends(q, left)[0]:
            return False
        if left.arrow == right.arrow and left.inverse != right.inverse:
            return False
        if not left.inverse and not right.inverse and (left.arrow, right.arrow) in rel:
            return False
        if left.inverse and right.inverse and (right.arrow, left.arrow) in rel:
            return False
    return True


def _oracle_strings(g, max_len):
    q = g.quiver
    letters = [Letter(a.name, inv) for a in q.arrows for inv in (False, True)]
    classes = {(("v", v),) for v in q.vertices}
    for n in range(1, max_len + 1):
        for word in itertools.product(letters, repeat=n):
            if _oracle_is_string(word, g):
                inv = tuple(x.inv() for x in reversed(word))
                classes.add(min(word, inv, key=lambda w: [(x.arrow, x.inverse) for x in w]))
    return len(classes)


def test_trivial_walk_is_string():
    g = build_qsp(corpus.kronecker())
    assert is_string(Walk.trivial("1"), g)


def test_unreduced_walk_is_not_string():
    g = build_qsp(corpus.kronecker())
    assert not is_string(Walk((Letter("a"), Letter("a", True))), g)


def test_special_loop_squares_to_zero(s1):
    g = build_qsp(s1)
    assert is_string(Walk((Letter("eps_1"),)), g)
    assert not is_string(Walk((Letter("eps_1"), Letter("eps_1"))), g)


def test_enumerate_single_vertex():
    g = build_qsp(pres("vertices: 1\narrows:\nrelations:\nspecial:"))
    assert enumerate_strings(g, 5) == [Walk.trivial("1")]


def test_enumerate_a2():
    strings = enumerate_strings(build_qsp(corpus.linear(2)), 3)
    assert len(strings) == 3
    assert [len(w) for w in strings] == [0, 0, 1]


@pytest.mark.parametrize("make, max_len", [
    (corpus.kronecker, 2),
    (corpus.kronecker, 4),
    (lambda: corpus.cycle(">><"), 4),
    (corpus.one_special_edge, 4),
    (lambda: corpus.loop_and_cycle(1, 2), 4),
    (corpus.special_triangle, 3),
])
def test_enumerate_matches_oracle(make, max_len):
    g = build_qsp(make())
    assert len(enumerate_strings(g, max_len)) == _oracle_strings(g, max_len)


def test_enumerate_order_and_canonical_representatives():
    g = build_qsp(corpus.loop_and_cycle(1, 2))
    strings = enumerate_strings(g, 4)
    assert [len(w) for w in strings] == sorted(len(w) for w in strings)
    for w in strings:
        if w.letters:
            assert canonical_string(w, g.quiver) == w


def test_find_band_tree_is_none():
    assert find_band(build_qsp(corpus.linear(4))) is None


def test_find_band_kronecker():
    b = find_band(build_qsp(corpus.kronecker()))
    assert sorted((x.arrow, x.inverse) for x in b.letters) == [("a", False), ("b", True)] or \
        sorted((x.arrow, x.inverse) for x in b.letters) == [("a", True), ("b", False)]


def test_find_band_acyclic_cycle_is_whole_cycle():
    p = corpus.cycle(">><<")
    b = find_band(build_qsp(p))
    assert sorted(x.arrow for x in b.letters) == ["c1", "c2", "c3", "c4"]


def test_string_types(s1):
    g = build_qsp(s1)
    q = g.quiver
    assert str(string_type(Walk.trivial("1"), build_qsp(corpus.linear(2)))) == "(u,u)"
    assert str(string_type(Walk.trivial("1"), g)) == "(p,p)"
    assert str(string_type(parse_walk("b1", q), g)) == "(p,p)"
    assert string_type(parse_walk("eps_1", q), g).left == "u"


def test_decide_examples(s1):
    assert decide_rep_type(corpus.linear(3)).finite
    rt = decide_rep_type(s1)
    assert not rt.finite
    q = rt.pair.quiver
    expected = parse_band("eps_2.b1.eps_1.b1~", q)
    same = {tuple(r.letters) for r in rotations(expected) + rotations(expected.inverse())}
    assert tuple(rt.band.letters) in same
    assert not decide_rep_type(corpus.loop_and_cycle(2, 2)).finite


def test_rotations(s1):
    g = build_qsp(s1)
    b = parse_band("eps_2.b1.eps_1.b1~", g.quiver)
    rots = rotations(b)
    assert len(rots) == 4 and b in rots
    for r in rots:
        assert is_string(Walk(r.letters), g) and is_band(r, g)
    assert len(rotations(find_band(build_qsp(corpus.kronecker())))) == 2


def test_powers_are_not_bands():
    g = build_qsp(corpus.kronecker())
    b = find_band(g)
    assert not is_band(Band(b.letters * 2), g)


def test_band_iff_long_string(random_presentations):
    for p in random_presentations:
        g = build_qsp(p)
        bound = 2 * len(g.quiver.arrows) + 1
        long = any(len(w) == bound for w in enumerate_strings(g, bound))
        assert (find_band(g) is not None) == long


def test_bands_have_string_rotations(random_presentations):
    for p in random_presentations:
        g = build_qsp(p)
        b = find_band(g)
        if b is not None:
            for r in rotations(b):
                assert is_string(Walk(r.letters * 2), g)


def test_finite_enumeration_stabilises(random_presentations):
    for p in random_presentations[:40]:
        rt = decide_rep_type(p)
        if rt.finite:
            n = 2 * len(rt.pair.quiver.arrows)
            assert len(enumerate_strings(rt.pair, n)) == len(enumerate_strings(rt.pair, n + 2))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_inverse_closure(seed):
    rng = random.Random(seed)
    p = corpus.random_presentation(rng)
    g = build_qsp(p)
    letters = [Letter(a.name, inv) for a in g.quiver.arrows for inv in (False, True)]
    for _ in range(30):
        word = tuple(rng.choice(letters) for _ in range(rng.randint(1, 6))) if letters else ()
        w = Walk(word) if word else Walk.trivial(g.quiver.vertices[0])
        if not _oracle_is_string(word, g):
            continue
        assert is_string(w, g) and is_string(w.inverse(), g)


def _relabel(p: SkewGentlePresentation, rng) -> SkewGentlePresentation:
    vs = list(p.quiver.vertices)
    vnew = dict(zip(vs, rng.sample([f"v{i}" for i in range(100)], len(vs))))
    anames = [a.name for a in p.quiver.arrows]
    anew = dict(zip(anames, rng.sample([f"r{i}" for i in range(100)], len(anames))))
    arrows = [Arrow(anew[a.name], vnew[a.source], vnew[a.target]) for a in p.quiver.arrows]
    rng.shuffle(arrows)
    order = [vnew[v] for v in vs]
    rng.shuffle(order)
    rels = tuple(MonomialRelation(anew[r.second], anew[r.first]) for r in p.relations)
    return SkewGentlePresentation(Quiver(tuple(order), tuple(arrows)), rels, tuple(vnew[v] for v in p.special))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_decide_is_invariant_under_relabelling(seed):
    rng = random.Random(seed)
    p = corpus.random_presentation(rng)
    assert decide_rep_type(p).finite == decide_rep_type(_relabel(p, rng)).finite
