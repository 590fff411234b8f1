# %% [markdown]
# # Cones and orders
#
# Classify pairs of events, evaluate the order relations and look at how
# a spatial frame splits the space cone in two.

# %%
from fractions import Fraction

from zeeman import ConeClass, NumericMode, RelationKind, classify_pair, event, global_frame, relates
from zeeman.minkowski import partition_side, quadratic_form

o = event([0, 0, 0, 0])
for y in ([1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [-3, 1, 2, 2], [Fraction(1, 2), Fraction(1, 3), 0, 0]):
    y = event(y)
    print(f"{', '.join(map(str, y.coords)):18s} Q={quadratic_form(y.coords)!s:>6}  {classify_pair(o, y).value}")

# %% [markdown]
# Exact mode decides the light cone with rationals.  Float mode uses a
# relative band instead, so an approximated sqrt(2) still lands on it.

# %%
fl = NumericMode.approx(1e-9)
y = event([-2, 1, 1, 2 ** 0.5], fl)
print("float:", classify_pair(event([0, 0, 0, 0], fl), y, fl).value)
print("exact:", classify_pair(o, event([-2, 1, 1, 2 ** 0.5])).value)

# %% [markdown]
# Relations.  The space order needs a frame; points on the frame's
# hyperplane are settled by the next basis vector.

# %%
u = global_frame([1, 0, 0])
for kind in RelationKind:
    frame = u if kind.needs_frame else None
    row = [relates(kind, o, event(c), frame) for c in ([1, 0, 0, 0], [0, 1, 0, 0], [0, -1, 0, 0], [1, 1, 0, 0], [-1, 1, 0, 0])]
    print(f"{kind.value:13s}", row)

print("tie-break side of (0,0,1,0):", partition_side(u, o, event([0, 0, 1, 0])).value)
print("light cone is exactly where both symmetric orders meet:",
      all((relates("space-order", o, y, u) or relates("space-order", y, o, u))
          and (relates("chron-eq", o, y) or relates("chron-eq", y, o)) == (classify_pair(o, y) in
          (ConeClass.NULL_FUTURE, ConeClass.NULL_PAST))
          for y in [event([1, 1, 0, 0]), event([-2, 0, 2, 0])]))
