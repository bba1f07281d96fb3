import pytest

from conftest import F3, Q, pres
from skewgentle import BudgetExceeded, PreconditionError, build_qsp, corpus, polarize
from skewgentle.linrep import brute_force_bricks, end_dim, is_isomorphic


def test_a2_one_class():
    got = brute_force_bricks(corpus.linear(2), {"1": 1, "2": 1}, F3)
    assert len(got) == 1 and got[0].maps["a1"].tolist() != [[0]]


def test_single_vertex():
    assert len(brute_force_bricks(pres("vertices: 1\narrows:\nrelations:\nspecial:"), {"1": 1}, F3)) == 1


def test_kronecker_classes_are_projective_line():
    # (a, b) != (0, 0) up to a common scalar: (3^2 - 1) / (3 - 1) = 4 points
    got = brute_force_bricks(corpus.kronecker(), {"1": 1, "2": 1}, F3)
    assert len(got) == 4
    for i, m in enumerate(got):
        assert end_dim(m) == 1
        assert not any(is_isomorphic(m, n) for n in got[:i])


def test_disconnected_support_has_no_bricks():
    assert brute_force_bricks(corpus.linear(3), {"1": 1, "2": 0, "3": 1}, F3) == []


def test_relations_are_respected():
    # the loop squares to zero, so in dimension 2 it has rank <= 1
    g = build_qsp(pres("vertices: 1\narrows:\nrelations:\nspecial: 1"))
    got = brute_force_bricks(g, {"1": 1}, F3)
    assert len(got) == 1 and got[0].maps["eps_1"].tolist() == [[0]]


def test_polarized_special_edge_dimension_two():
    pp = polarize(corpus.one_special_edge())
    got = brute_force_bricks(pp, {"1+": 1, "1-": 0, "2+": 1, "2-": 0}, F3)
    assert len(got) == 1


def test_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_bricks(corpus.kronecker(), {"1": 3, "2": 3}, F3, budget=1000)


def test_needs_finite_field():
    with pytest.raises(PreconditionError):
        brute_force_bricks(corpus.kronecker(), {"1": 1, "2": 1}, Q)
