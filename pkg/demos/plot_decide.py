"""
Deciding representation type
============================

A skew-gentle presentation is a quiver with monomial relations of length two
and a set of special vertices. Each special vertex carries a loop squaring to
the identity. The algebra has infinitely many bricks exactly when the gentle
pair obtained by turning every special loop into a nilpotent one has a band.
"""

from skewgentle import corpus, decide_rep_type, parse_presentation, validate_skew_gentle
from skewgentle.cli import decide_lines

# %%
# The smallest interesting example: one arrow between two special vertices.
text = """\
vertices: 1 2
arrows: b1: 1 -> 2
relations:
special: 1 2
"""
p = parse_presentation(text)
print(validate_skew_gentle(p).format())

# %%
# The verdict comes with a band of the gentle pair. The special loops show up
# as ``eps_1`` and ``eps_2``.
rt = decide_rep_type(p)
print(rt.verdict, rt.band)

# %%
# A path without special vertices has no band at all.
print(decide_rep_type(corpus.linear(4)).verdict)

# %%
# The command-line ``decide`` report goes further. It shrinks the band to a
# minimal one, names the reduction case and records where the band pinches.
for name in ["kronecker", "special-edge", "loop-cycle-2-3", "figure-eight"]:
    print(f"== {name}")
    print("\n".join(decide_lines(corpus.FIXTURES[name]())))
