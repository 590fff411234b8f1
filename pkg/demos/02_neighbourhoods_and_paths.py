# %% [markdown]
# # Neighbourhoods, axes and paths
#
# The basic sets keep a Euclidean ball and throw away part of it
# according to the cone structure around the centre.

# %%
from fractions import Fraction

from zeeman import Polyline, TopologyKind, axis_trace, event, nbhd_contains, path_check
from zeeman.neighborhoods import null_axis, space_axis, time_axis
from zeeman.verify import random_zigzag

o = event([0, 0, 0, 0])
probe = [event(c) for c in ([1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [3, 0, 0, 0])]
for kind in TopologyKind:
    print(f"{kind.value:6s}", [nbhd_contains(kind, o, 2, y) for y in probe])

# %% [markdown]
# Restricted to a straight line through the centre, a basic set is either
# just the centre or an open interval.

# %%
cases = [("zt", space_axis([0, 1, 0, 0])), ("zt", time_axis([1, 0, 0, 0])),
         ("zs", time_axis([2, 1, 0, 0])), ("zs", space_axis([0, 1, 1, 0])),
         ("z", null_axis([1, 0, 1, 0])), ("z", time_axis([3, 1, 0, 0]))]
for kind, axis in cases:
    tr = axis_trace(kind, o, Fraction(3, 2), axis)
    shape = "singleton" if tr.trace_is_singleton else "interval" if tr.trace_is_euclidean_interval else "other"
    print(f"{kind:3s} on a {axis.kind:5s} axis: {shape} ({sum(tr.members)} of {len(tr.members)} samples)")

# %% [markdown]
# Polylines.  A timelike zigzag going forward and backward in time is a
# continuous ZT path; a single null segment breaks it.

# %%
zz = random_zigzag(seed=0, dim=4, segments=100)
r = path_check(zz, "zt")
print("zigzag:", r.continuous, r.zigzag, [c.value for c in r.segment_classes[:4]])
print("null segment, zt:", path_check(Polyline((o, event([1, 1, 0, 0]))), "zt").continuous)
print("spacelike path, zs:", path_check(Polyline((o, event([0, 1, 0, 0]), event([0, 2, 1, 0]))), "zs").continuous)
