# %% [markdown]
# # Does the finite interval topology depend on the frame?
#
# In two dimensions the two possible frames give the same subbasis, so
# nothing can change.  In four dimensions three events are enough to see
# a difference.

# %%
from fractions import Fraction

from zeeman import IntervalOrder, PointCloud, compare_topologies, event, generate_topology, global_frame, interval_subbasis
from zeeman.topology import bits

p = event([0, 0, 0, 0])
q = event([1, Fraction(1, 2), 0, 0])          # timelike to p
r = event([Fraction(1, 2), Fraction(1, 4), 5, 0])  # spacelike to both, far along e2
cloud = PointCloud((p, q, r))

for name, u in (("e1", [1, 0, 0]), ("e2", [0, 1, 0])):
    t = generate_topology(interval_subbasis(cloud, IntervalOrder.SPACE_ORDER, global_frame(u)))
    print(name, [bits(m) for m in t.min_open])

# %% [markdown]
# With u = e1, r sees p on its negative side and q on its positive side,
# so the complement of r's negative half separates q from p.  With u = e2
# both p and q are on the same side of r and stay glued.

# %%
a = generate_topology(interval_subbasis(cloud, IntervalOrder.SPACE_ORDER, global_frame([1, 0, 0])))
b = generate_topology(interval_subbasis(cloud, IntervalOrder.SPACE_ORDER, global_frame([0, 1, 0])))
print("comparison:", compare_topologies(a, b).value)

# %% [markdown]
# The pointed sets (X - S+(x)) & (X - S-(x)) are the same for every frame,
# which is why the neighbourhood-level identities hold regardless.

# %%
from zeeman.topology import cone_filter_sets, pointed_interval_sets
for u in ([1, 0, 0], [0, 1, 0], [1, 1, 1]):
    print(u, pointed_interval_sets(cloud, "space-order", global_frame(u)) == cone_filter_sets(cloud, "zt"))
