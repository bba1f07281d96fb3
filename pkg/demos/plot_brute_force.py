"""
Counting bricks by brute force
==============================

Over a small prime field every representation with a given dimension vector
can be listed. The oracle keeps the bricks and removes isomorphic copies.
This gives an independent check on representation-finite examples.
"""

import itertools

from skewgentle import corpus, decide_rep_type, parse_presentation, polarize
from skewgentle.linrep import FieldSpec, brute_force_bricks

F3 = FieldSpec(3)

# %%
# The Kronecker quiver with dimension vector (1, 1) has one brick for each
# point of the projective line over the field. Over F_3 that gives 4.
print(len(brute_force_bricks(corpus.kronecker(), {"1": 1, "2": 1}, F3)))

# %%
# A representation-finite presentation with a special vertex. Its polarized
# quiver splits the special vertex into two, so the scan runs on the split
# quiver.
p = parse_presentation("""\
vertices: 1 2 3
arrows: a1: 1 -> 2 ; a2: 2 -> 3
relations:
special: 1
""")
print(decide_rep_type(p).verdict)
pp = polarize(p)
print(pp.quiver.vertices)

total = 0
for dims in itertools.product(range(3), repeat=len(pp.quiver.vertices)):
    if 0 < sum(dims) <= 3:
        found = brute_force_bricks(pp, dict(zip(pp.quiver.vertices, dims)), F3)
        if found:
            print(dims, len(found))
        total += len(found)
print("bricks with total dimension <= 3:", total)
