import pytest

from conftest import Q, F3
from skewgentle import PreconditionError, ReflectionError, corpus
from skewgentle.linrep import (
    Representation,
    coxeter_orbit,
    end_dim,
    hom_dim,
    is_isomorphic,
    preprojective,
    projective,
    reflect,
    simple,
    source_order,
)
from skewgentle.linrep.reflection import flip_at, is_sink, is_source
from skewgentle.polarization import BoundQuiver


def _bq(p):
    return BoundQuiver(p.quiver)


def _reflect_dims(q, dims, v):
    """Independent formula: new dim at v is the sum over neighbours minus the old one."""
    adj = sum(dims[a.source if a.target == v else a.target] for a in q.arrows if v in (a.source, a.target))
    return dict(dims, **{v: adj - dims[v]})


def test_simple_elsewhere_is_unchanged():
    a3 = _bq(corpus.linear(3))
    m = reflect(simple(a3, "1", Q), "3")
    assert m.dims == {"1": 1, "2": 0, "3": 0}


def test_projective_at_source_reflected_at_sink():
    a2 = _bq(corpus.linear(2))
    m = reflect(projective(a2, "1", Q), "2")
    assert m.dim_vector() == (1, 0)
    assert is_source(m.quiver, "2")


def test_simple_at_sink_cannot_be_reflected():
    a2 = _bq(corpus.linear(2))
    with pytest.raises(ReflectionError):
        reflect(simple(a2, "2", Q), "2")


def test_neither_sink_nor_source():
    a3 = _bq(corpus.linear(3))
    with pytest.raises(ReflectionError):
        reflect(projective(a3, "1", Q), "2")


def test_relations_are_refused():
    from skewgentle import build_qsp
    g = build_qsp(corpus.loop_and_cycle(1, 2))
    with pytest.raises(PreconditionError):
        reflect(Representation(g, Q, {}), "1")


def test_dtilde4_sweep_matches_formula():
    bq = _bq(corpus.dtilde4())
    m = simple(bq, "0", Q)
    q, dims = bq.quiver, dict(m.dims)
    for v in source_order(bq):
        m = reflect(m, v)
        dims = _reflect_dims(q, dims, v)
        q = flip_at(q, v)
        assert m.dims == dims
    assert m.dims == {"0": 3, "1": 1, "2": 1, "3": 1, "4": 1}


def test_reflect_back_is_isomorphic():
    bq = _bq(corpus.dtilde4())
    m = preprojective(bq, "1", Q, 3).modules[2]
    there = reflect(m, "0")
    back = reflect(there, "0")
    assert back.quiver == m.quiver and is_isomorphic(back, m)


def test_finite_type_orbit_exhausts():
    orbit = preprojective(_bq(corpus.linear(2)), "1", Q, 50)
    assert orbit.exhausted and len(orbit.modules) < 50


@pytest.mark.parametrize("field", [Q, F3])
def test_dtilde4_orbit_is_bricks(field):
    bq = _bq(corpus.dtilde4())
    orbit = coxeter_orbit(bq, projective(bq, "1", field), 5)
    mods = orbit.modules
    assert not orbit.exhausted and len(mods) == 5
    assert all(end_dim(m) == 1 for m in mods)
    totals = [m.total_dim for m in mods]
    assert totals == sorted(set(totals))
    for i, m in enumerate(mods):
        for j, n in enumerate(mods):
            if i < j:
                assert hom_dim(n, m) == 0  # no maps back towards earlier preprojectives


def test_orbit_recurrence():
    bq = _bq(corpus.dtilde4())
    mods = preprojective(bq, "2", Q, 4).modules
    for a, b in zip(mods, mods[1:]):
        q, dims = bq.quiver, dict(a.dims)
        for v in source_order(bq):
            dims = _reflect_dims(q, dims, v)
            q = flip_at(q, v)
        assert b.dims == dims


def test_sink_and_source_helpers():
    q = corpus.linear(3).quiver
    assert is_source(q, "1") and is_sink(q, "3") and not is_sink(q, "2")
    assert source_order(_bq(corpus.linear(3))) == ["1", "2", "3"]
