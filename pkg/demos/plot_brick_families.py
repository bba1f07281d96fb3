"""
Explicit families of bricks
===========================

Every representation-infinite presentation gets an infinite family of
pairwise non-isomorphic bricks over the polarized quiver. Each member is
checked by computing its endomorphism ring.
"""

from skewgentle import corpus, realize, verify_witness, witness_family
from skewgentle.linrep import FieldSpec, end_dim, hom_dim, serialize_representation

Q, F5 = FieldSpec(0), FieldSpec(5)

# %%
# A special vertex joined by a path to a cycle. The family members grow in
# dimension, and every one of them has a one-dimensional endomorphism ring.
d = witness_family(corpus.loop_and_cycle(2, 3))
print(d)
for n in range(1, 5):
    m = realize(d, n, Q)
    print(n, m.dim_vector(), end_dim(m))

# %%
# Member 1 written out in the representation file format.
print(serialize_representation(realize(d, 1, Q)))

# %%
# With two special ends and a longer path, the family is a preprojective
# Coxeter orbit on an affine type D quiver.
d = witness_family(corpus.special_path(3))
mods = [realize(d, n, F5) for n in range(1, 6)]
print([m.total_dim for m in mods])
print([hom_dim(b, a) for a, b in zip(mods, mods[1:])])

# %%
# ``verify_witness`` runs the same checks over several fields at once.
print(verify_witness(witness_family(corpus.one_special_edge()), 4, [Q, F5]).format())
