import pytest

from conftest import pres
from skewgentle import (
    MonomialRelation,
    PresentationError,
    build_qsp,
    corpus,
    parse_presentation,
    serialize_presentation,
    validate_gentle,
    validate_skew_gentle,
)
from skewgentle.presentation import Arrow, Quiver, SkewGentlePresentation


def test_minimal_input():
    p = pres("vertices: 1 2\narrows: a: 1 -> 2\nrelations:\nspecial:")
    assert p.quiver.vertices == ("1", "2")
    assert [a.name for a in p.quiver.arrows] == ["a"]
    assert p.relations == () and p.special == ()


def test_noncomposable_relation_is_rejected():
    with pytest.raises(PresentationError, match="compos"):
        pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 1 -> 3\nrelations: b*a\nspecial:")


def test_s1_presentation(s1):
    assert s1.special == ("1", "2")
    assert [(a.source, a.target) for a in s1.quiver.arrows] == [("1", "2")]


@pytest.mark.parametrize("text, fragment", [
    ("vertices: 1\narrows: a: 1 -> 2\nrelations:\nspecial:", "2"),
    ("vertices: 1 1\narrows:\nrelations:\nspecial:", "duplicate"),
    ("vertices: 1 2\narrows: a: 1 -> 2 ; a: 2 -> 1\nrelations:\nspecial:", "duplicate"),
    ("vertices: 1\narrows:\nrelations:", "special"),
    ("vertices: 1\narrows:\nrelations:\nspecial: 7", "7"),
    ("vertices: 1\narrows: eps_1: 1 -> 1\nrelations:\nspecial:", "eps_"),
    ("vertices: 1 2\narrows: a 1 -> 2\nrelations:\nspecial:", "line 2"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PresentationError, match=fragment):
        parse_presentation(text)


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("vertices: 1 2\narrows: a: 1 -> 2\nrelations: a*\nspecial:")
    assert exc.value.line == 3 and exc.value.column is not None


def test_comments_and_blank_lines():
    p = pres("# header\nvertices: 1 2  # two\n\narrows: a: 1 -> 2\nrelations:\nspecial: 2\n")
    assert p.special == ("2",)


@pytest.mark.parametrize("name", sorted(corpus.FIXTURES))
def test_round_trip_fixtures(name):
    p = corpus.FIXTURES[name]()
    text = serialize_presentation(p)
    assert parse_presentation(text) == p
    assert serialize_presentation(parse_presentation(text)) == text


def test_round_trip_random(random_presentations):
    for p in random_presentations:
        assert parse_presentation(serialize_presentation(p)) == p


def test_kronecker_is_gentle():
    p = corpus.kronecker()
    assert validate_gentle(p.quiver, p.relations).passed


def test_three_out_arrows_fail_g1():
    p = pres("vertices: 0 1 2 3\narrows: a: 0 -> 1 ; b: 0 -> 2 ; c: 0 -> 3\nrelations:\nspecial:")
    report = validate_gentle(p.quiver, p.relations)
    assert not report.passed
    g1 = [v for v in report.violations if v.condition == "G1"]
    assert g1 and "0" in g1[0].witnesses


def test_g2_and_g3():
    # two ways on from b with no relation: G2; two relations starting with c: G3
    p = pres("vertices: 1 2 3 4\narrows: b: 1 -> 2 ; c: 2 -> 3 ; d: 2 -> 4\nrelations:\nspecial:")
    assert "G2" in validate_gentle(p.quiver, p.relations).conditions()
    p = pres("vertices: 1 2 3 4\narrows: b: 1 -> 2 ; c: 2 -> 3 ; d: 2 -> 4\nrelations: c*b ; d*b\nspecial:")
    assert "G3" in validate_gentle(p.quiver, p.relations).conditions()


def test_loop_and_cycle_gentle_pair_passes():
    g = build_qsp(corpus.loop_and_cycle(2, 3))
    assert validate_gentle(g.quiver, g.relations).passed


def test_build_qsp_without_specials():
    p = corpus.cycle(">><")
    g = build_qsp(p)
    assert g.quiver == p.quiver and set(g.relations) == set(p.relations)


def test_build_qsp_s1(s1):
    g = build_qsp(s1)
    assert sorted(a.name for a in g.quiver.arrows) == ["b1", "eps_1", "eps_2"]
    assert set(g.relations) == {MonomialRelation("eps_1", "eps_1"), MonomialRelation("eps_2", "eps_2")}


@pytest.mark.parametrize("s, t", [(1, 1), (2, 2), (2, 3), (3, 1)])
def test_build_qsp_case_ii_arrow_count(s, t):
    g = build_qsp(corpus.loop_and_cycle(s, t))
    assert len(g.quiver.arrows) == s + t + 1


def test_build_qsp_counts(random_presentations):
    for p in random_presentations:
        g = build_qsp(p)
        assert len(g.quiver.arrows) == len(p.quiver.arrows) + len(p.special)
        assert len(g.relations) == len(p.relations) + len(p.special)


def test_validity_is_delegated_to_the_gentle_pair(random_presentations):
    for p in random_presentations:
        g = build_qsp(p)
        assert validate_skew_gentle(p).passed
        assert validate_gentle(g.quiver, g.relations).passed


def test_s1_is_skew_gentle(s1):
    assert validate_skew_gentle(s1).passed


def test_special_vertex_with_two_loops_fails_g1():
    p = pres("vertices: 1\narrows: a: 1 -> 1 ; b: 1 -> 1\nrelations: a*a ; b*b\nspecial: 1")
    report = validate_skew_gentle(p)
    assert "G1" in report.conditions()


def test_oriented_cycle_without_relations_is_infinite_dimensional():
    p = pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 3 -> 1\nrelations:\nspecial:")
    report = validate_skew_gentle(p)
    assert not report.passed and "FD" in report.conditions()
    q = pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 3 -> 1\nrelations: b*a\nspecial:")
    assert validate_skew_gentle(q).passed


def test_orientation_sensitivity():
    # c*b is composable in the oriented cycle; flipping c breaks the cycle
    cyc = pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 3 -> 1\nrelations:\nspecial:")
    flipped = pres("vertices: 1 2 3\narrows: a: 1 -> 2 ; b: 2 -> 3 ; c: 1 -> 3\nrelations:\nspecial:")
    assert not validate_skew_gentle(cyc).passed
    assert validate_skew_gentle(flipped).passed


def test_reserved_loop_name_in_model():
    q = Quiver(("1",), (Arrow("eps_1", "1", "1"),))
    with pytest.raises(PresentationError):
        SkewGentlePresentation(q, (), ())


def test_report_format_is_stable():
    p = pres("vertices: 0 1 2 3\narrows: a: 0 -> 1 ; b: 0 -> 2 ; c: 0 -> 3\nrelations:\nspecial:")
    text = validate_skew_gentle(p).format()
    assert text.startswith("verdict: fail\n")
    assert text == validate_skew_gentle(p).format()
