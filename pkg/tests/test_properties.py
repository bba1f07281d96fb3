import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F5, Q, random_quiver_rep_pair
from skewgentle import corpus
from skewgentle.linrep import (
    direct_sum,
    end_dim,
    hom_basis,
    hom_dim,
    is_intertwiner,
    is_isomorphic,
    preprojective,
    reflect,
)
from skewgentle.linrep.reflection import is_sink
from skewgentle.polarization import BoundQuiver

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_hom_basis_resubstitutes(seed):
    m, n = random_quiver_rep_pair(random.Random(seed), F5)
    hb = hom_basis(m, n)
    assert hb.dimension == len(hb.basis)
    assert all(is_intertwiner(g, m, n) for g in hb.basis)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_hom_is_additive(seed):
    rng = random.Random(seed)
    m, n1 = random_quiver_rep_pair(rng, F5, max_total=4)
    n2 = m
    assert hom_dim(m, direct_sum(n1, n2)) == hom_dim(m, n1) + hom_dim(m, n2)
    assert hom_dim(direct_sum(n1, n2), m) == hom_dim(n1, m) + hom_dim(n2, m)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_identity_endomorphism(seed):
    m, _ = random_quiver_rep_pair(random.Random(seed), F5)
    assert m.total_dim == 0 or end_dim(m) >= 1


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3), st.sampled_from(["1", "2", "3", "4"]))
def test_reflection_there_and_back(k, start):
    bq = BoundQuiver(corpus.dtilde4().quiver)
    m = preprojective(bq, start, Q, k + 1).modules[k]
    assert is_sink(bq.quiver, "0")
    if m.dims["0"] == 0 or (m.total_dim == m.dims["0"]):
        return
    back = reflect(reflect(m, "0"), "0")
    assert is_isomorphic(back, m)
