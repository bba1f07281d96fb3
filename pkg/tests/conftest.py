import random

import pytest

from skewgentle import corpus, parse_presentation
from skewgentle.linrep import FieldSpec

Q = FieldSpec(0)
F3 = FieldSpec(3)
F5 = FieldSpec(5)


def pres(text: str):
    return parse_presentation(text)


S1_TEXT = """\
vertices: 1 2
arrows: b1: 1 -> 2
relations:
special: 1 2
"""


@pytest.fixture
def s1():
    return pres(S1_TEXT)


@pytest.fixture(scope="session")
def random_presentations():
    return corpus.random_corpus(120, seed=1)


@pytest.fixture
def rng():
    return random.Random(12345)


def random_quiver_rep_pair(rng, field, max_total=8):
    """Two random representations of one random relation-free quiver."""
    from skewgentle.linrep import Representation
    from skewgentle.polarization import BoundQuiver
    from skewgentle.presentation import Arrow, Quiver

    n = rng.randint(1, 4)
    vs = tuple(str(i) for i in range(n))
    arrows = tuple(
        Arrow(f"a{k}", rng.choice(vs), rng.choice(vs)) for k in range(rng.randint(0, 5)))
    bq = BoundQuiver(Quiver(vs, arrows))

    def rep():
        dims = {v: 0 for v in vs}
        for _ in range(rng.randint(1, max_total)):
            dims[rng.choice(vs)] += 1
        maps = {
            a.name: [[rng.randrange(field.characteristic or 5) for _ in range(dims[a.source])]
                     for _ in range(dims[a.target])]
            for a in arrows if dims[a.source] and dims[a.target]
        }
        return Representation(bq, field, dims, maps)

    return rep(), rep()
