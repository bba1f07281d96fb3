from fractions import Fraction

import pytest

from conftest import pres
from skewgentle import PreconditionError, arrow_fibers, corpus, polarize, relation_image
from skewgentle.polarization import parse_bound_quiver, serialize_polarized, signs
from skewgentle.presentation import MonomialRelation


def _edge(special):
    return pres(f"vertices: i j\narrows: a: i -> j\nrelations:\nspecial: {special}")


@pytest.mark.parametrize("special, names", [
    ("", ["a"]),
    ("i", ["a+", "a-"]),
    ("j", ["+a", "-a"]),
    ("i j", ["+a+", "+a-", "-a+", "-a-"]),
])
def test_arrow_fibers_configurations(special, names):
    fibers = arrow_fibers(_edge(special), "a")
    assert [f.name for f in fibers] == names


def test_fibers_of_special_loop_rejected(s1):
    with pytest.raises(PreconditionError):
        arrow_fibers(s1, "eps_1")


def test_s1_polarization(s1):
    pp = polarize(s1)
    assert pp.quiver.vertices == ("1+", "1-", "2+", "2-")
    assert len(pp.quiver.arrows) == 4 and pp.relations == ()
    assert pp.arrow("b1", "-", "+") == "-b1+"


def test_no_specials_is_identity():
    p = corpus.cycle(">><")
    pp = polarize(p)
    assert pp.quiver == p.quiver
    assert [r.terms for r in pp.relations] == [((Fraction(1), r.second, r.first),) for r in p.relations]


def _path(special):
    return pres(f"vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3\nrelations: b*a\nspecial: {special}")


def test_relation_image_ordinary():
    p = _path("")
    (rel,) = relation_image(p, MonomialRelation("b", "a"))
    assert rel.terms == ((1, "b", "a"),)


def test_relation_image_special_middle():
    p = _path("2")
    (rel,) = relation_image(p, MonomialRelation("b", "a"))
    assert sorted(rel.terms) == sorted([(1, "b+", "+a"), (1, "b-", "-a")])


def test_relation_image_special_ends():
    # hand expansion: tau over S(3), rho over S(1), sigma over S(2) = {o}
    p = _path("1 3")
    rels = relation_image(p, MonomialRelation("b", "a"))
    got = sorted(r.terms for r in rels)
    want = sorted([
        ((1, "+b", "a+"),), ((1, "+b", "a-"),),
        ((1, "-b", "a+"),), ((1, "-b", "a-"),),
    ])
    assert got == want


def test_relation_image_all_special():
    p = _path("1 2 3")
    rels = relation_image(p, MonomialRelation("b", "a"))
    assert len(rels) == 4 and all(len(r.terms) == 2 for r in rels)


def test_relation_image_unknown_relation():
    with pytest.raises(PreconditionError):
        relation_image(_path(""), MonomialRelation("a", "b"))


def test_counting_identities(random_presentations):
    for p in random_presentations:
        pp = polarize(p)
        assert len(pp.quiver.vertices) == len(p.quiver.vertices) + len(p.special)
        assert len(pp.quiver.arrows) == sum(
            len(signs(p, a.source)) * len(signs(p, a.target)) for a in p.quiver.arrows)
        assert len(pp.relations) == sum(
            len(signs(p, p.quiver.arrow(r.second).target)) * len(signs(p, p.quiver.arrow(r.first).source))
            for r in p.relations)
        for rel in pp.relations:
            rel.check_parallel(pp.quiver)


def test_polarized_round_trip(random_presentations):
    for p in random_presentations[:40]:
        pp = polarize(p)
        bq = parse_bound_quiver(serialize_polarized(pp))
        assert bq.quiver == pp.quiver and bq.relations == pp.relations


def test_two_special_pinch_quiver_vertex_count():
    p = corpus.special_path(3)
    assert len(polarize(p).quiver.vertices) == len(p.quiver.vertices) + 2


def test_polarize_rejects_invalid():
    with pytest.raises(PreconditionError):
        polarize(pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 3 -> 1\nrelations:\nspecial:"))
