# %% [markdown]
# # Symmetries
#
# Rational boosts, rotations, dilatations and translations keep every
# frame-free relation matrix unchanged, exactly.  A time reflection
# swaps future and past, transposing the chronological order.

# %%
from fractions import Fraction

import numpy as np

from zeeman import RelationKind, boost, random_transform, relation_matrix, sprinkle, time_reflection, unit_box

cloud = sprinkle(unit_box(4), 24, seed=3, null_pair_fraction=0.25)
g = boost(4, 1, Fraction(3, 5))
print("boost 3/5 linear part row 0:", [str(c) for c in g.linear[0]])

for k in range(5):
    h = random_transform(k)
    moved = cloud.transformed(h)
    same = all(np.array_equal(relation_matrix(cloud, kind), relation_matrix(moved, kind))
               for kind in RelationKind if not kind.needs_frame)
    print(f"transform {k}: scale {h.scale}, relations unchanged: {same}")

# %%
chron = relation_matrix(cloud, "chron")
flipped = relation_matrix(cloud.transformed(time_reflection(4)), "chron")
print("time reflection transposes chron:", np.array_equal(flipped, chron.T))
