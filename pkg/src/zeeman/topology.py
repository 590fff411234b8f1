"""Finite topologies on point clouds.

Subsets of an N-point cloud are Python ints used as bitsets (bit i is
event i).  A finite topology is kept in canonical form as the map from
each point to its smallest open neighbourhood, so comparing two
topologies never needs the full lattice of open sets.
"""
from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .cloud import EQ, NF, NP, SP, TF, TP, PointCloud
from .minkowski import PartitionFrame
from .neighborhoods import TopologyKind


def bits(mask: int) -> list:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def from_indices(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def rows_to_ints(matrix: np.ndarray) -> list:
    """Boolean (k, N) matrix to k bitsets."""
    packed = np.packbits(np.asarray(matrix, dtype=bool), axis=-1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def ints_to_rows(masks: Sequence[int], n: int) -> np.ndarray:
    nbytes = (n + 7) // 8
    buf = b"".join(m.to_bytes(nbytes, "little") for m in masks)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(masks), nbytes)
    return np.unpackbits(raw, axis=-1, bitorder="little")[:, :n].astype(bool)


@dataclass(frozen=True)
class SetFamily:
    universe_size: int
    members: tuple

    def __post_init__(self):
        universe = (1 << self.universe_size) - 1
        members = tuple(sorted(set(int(m) for m in self.members)))
        for m in members:
            if m < 0 or m & ~universe:
                raise ValueError("family member is not a subset of the universe")
        object.__setattr__(self, "members", members)

    @property
    def universe(self) -> int:
        return (1 << self.universe_size) - 1

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def to_lists(self) -> list:
        return sorted(bits(m) for m in self.members)

    @classmethod
    def from_lists(cls, universe_size: int, lists) -> "SetFamily":
        return cls(universe_size, tuple(from_indices(s) for s in lists))


@dataclass(frozen=True)
class FiniteTopology:
    universe_size: int
    min_open: tuple

    def __post_init__(self):
        mo = tuple(int(m) for m in self.min_open)
        if len(mo) != self.universe_size:
            raise ValueError("need one minimal open set per point")
        for p, u in enumerate(mo):
            if not u >> p & 1:
                raise ValueError(f"point {p} is missing from its minimal open set")
            for q in bits(u):
                if mo[q] & ~u:
                    raise ValueError(f"minimal open sets of {p} and {q} are incoherent")
        object.__setattr__(self, "min_open", mo)

    def basis(self) -> SetFamily:
        """The minimal basis: one smallest open set per point."""
        return SetFamily(self.universe_size, self.min_open)

    def is_discrete(self) -> bool:
        return all(m == 1 << p for p, m in enumerate(self.min_open))

    def is_open(self, mask: int) -> bool:
        return all(self.min_open[p] & ~mask == 0 for p in bits(mask))


def generate_topology(sub: SetFamily) -> FiniteTopology:
    """Topology generated by ``sub`` as a subbasis.

    The smallest open set about p is the intersection of every member
    containing p, or the whole universe when none does.
    """
    n = sub.universe_size
    if n < 1:
        raise ValueError("empty universe")
    if not sub.members:
        return FiniteTopology(n, (sub.universe,) * n)
    m = ints_to_rows(sub.members, n)
    mo = []
    for p in range(n):
        rows = m[m[:, p]]
        mo.append(rows_to_ints(rows.all(axis=0)[None])[0] if len(rows) else sub.universe)
    return FiniteTopology(n, tuple(mo))


def intersection_topology(a: SetFamily, b: SetFamily) -> SetFamily:
    """Basis {U & V} of the coarsest topology finer than both generated topologies.

    U and V range over the minimal bases of the two generated topologies,
    which are intersection-closed for the purpose of generating; empty
    intersections are dropped.
    """
    if a.universe_size != b.universe_size:
        raise ValueError("families live on different universes")
    ba = generate_topology(a).basis().members
    bb = generate_topology(b).basis().members
    out = {u & v for u in ba for v in bb}
    out.discard(0)
    return SetFamily(a.universe_size, tuple(out))


class Comparison(str, enum.Enum):
    EQUAL = "Equal"
    A_FINER = "AFiner"
    B_FINER = "BFiner"
    INCOMPARABLE = "Incomparable"


def compare_topologies(a: FiniteTopology, b: FiniteTopology) -> Comparison:
    if a.universe_size != b.universe_size:
        raise ValueError("topologies live on different universes")
    a_finer = all(x & ~y == 0 for x, y in zip(a.min_open, b.min_open))
    b_finer = all(y & ~x == 0 for x, y in zip(a.min_open, b.min_open))
    if a_finer and b_finer:
        return Comparison.EQUAL
    if a_finer:
        return Comparison.A_FINER
    if b_finer:
        return Comparison.B_FINER
    return Comparison.INCOMPARABLE


def topology_difference(a: FiniteTopology, b: FiniteTopology) -> list:
    """Points whose minimal open sets differ, with both sets."""
    return [(p, x, y) for p, (x, y) in enumerate(zip(a.min_open, b.min_open)) if x != y]


# --------------------------------------------------------------------------
# families built from a cloud


class IntervalOrder(str, enum.Enum):
    SPACE_ORDER = "space-order"   # S+(x) = positive side of the space cone plus light cone
    CHRON_EQ = "chron-eq"         # C+(x) = chronological future plus light cone
    CHRON = "chron"
    CAUSAL = "causal"


def future_past_masks(cloud: PointCloud, order, frame: PartitionFrame | None = None,
                      include_null: bool = True) -> tuple:
    """Boolean N x N future and past matrices; row i is the set for event i.

    ``include_null=False`` drops the light-cone part of the first two
    orders; it exists only to build negative controls.
    """
    order = IntervalOrder(order)
    if (order is IntervalOrder.SPACE_ORDER) != (frame is not None):
        raise ValueError("a frame is needed exactly for the space order")
    cls = cloud.geometry.cls
    null = ((cls == NF) | (cls == NP)) if include_null else np.zeros_like(cls, dtype=bool)
    if order is IntervalOrder.SPACE_ORDER:
        side = cloud.geometry.side_matrix(frame)
        return (side > 0) | null, (side < 0) | null
    if order is IntervalOrder.CHRON_EQ:
        return (cls == TF) | null, (cls == TP) | null
    if order is IntervalOrder.CHRON:
        return cls == TF, cls == TP
    return (cls == TF) | (cls == NF) | (cls == EQ), (cls == TP) | (cls == NP) | (cls == EQ)


def interval_subbasis(cloud: PointCloud, order, frame: PartitionFrame | None = None,
                      include_null: bool = True) -> SetFamily:
    """Complements of every future set and every past set."""
    fut, past = future_past_masks(cloud, order, frame, include_null)
    u = cloud.universe
    members = [u & ~m for m in rows_to_ints(fut)] + [u & ~m for m in rows_to_ints(past)]
    return SetFamily(len(cloud), tuple(members))


def pointed_interval_sets(cloud: PointCloud, order, frame: PartitionFrame | None = None,
                          include_null: bool = True) -> list:
    """For each x, the subbasic pair at x intersected: (X - future(x)) & (X - past(x))."""
    fut, past = future_past_masks(cloud, order, frame, include_null)
    return [cloud.universe & ~m for m in rows_to_ints(fut | past)]


def cone_filter_sets(cloud: PointCloud, kind) -> list:
    """For each centre x, the events its basic ``kind`` sets may contain (ball aside)."""
    kind = TopologyKind(kind)
    cls = cloud.geometry.cls
    if kind is TopologyKind.EUCLID:
        keep = np.ones_like(cls, dtype=bool)
    elif kind is TopologyKind.ZT:
        keep = (cls == TF) | (cls == TP) | (cls == EQ)
    elif kind is TopologyKind.ZS:
        keep = (cls == SP) | (cls == EQ)
    else:
        keep = (cls != NF) & (cls != NP)
    return rows_to_ints(keep)


def _thresholds(cloud: PointCloud, radii, radii_sq) -> list:
    """Squared radii in the geometry's scaled units."""
    geom = cloud.geometry
    if radii is not None and radii_sq is not None:
        raise ValueError("give radii or radii_sq, not both")
    if radii is not None:
        radii = list(radii)
        if not radii:
            raise ValueError("radii must be nonempty")
        return [geom.eps_sq_scaled(r) for r in radii]
    if radii_sq is not None:
        radii_sq = list(radii_sq)
        if not radii_sq or any(not r > 0 for r in radii_sq):
            raise ValueError("squared radii must be positive and nonempty")
        return [r * geom.unit2 for r in radii_sq]
    return default_thresholds(cloud)


def default_thresholds(cloud: PointCloud) -> list:
    """Squared thresholds realising every ball trace on the cloud."""
    geom = cloud.geometry
    d2 = geom.distinct_d2
    if not d2:
        return [geom.unit2]
    if cloud.mode.exact:
        return d2 + [2 * d2[-1]]
    tol = cloud.mode.null_tolerance
    return [d2[0] / 2] + [v * (1 + tol) for v in d2]


def _ball_levels(cloud: PointCloud, thresholds: list) -> tuple:
    """Rank matrix and the rank cut for each threshold: d2 < thr <=> rank < cut."""
    geom = cloud.geometry
    d2 = geom.distinct_d2
    index = {v: k + 1 for k, v in enumerate(d2)}
    rank = np.array([[index.get(v, 0) for v in row] for row in geom.d2.tolist()], dtype=np.int64)
    cuts = [1 + bisect_left(d2, t) for t in thresholds]
    return rank, cuts


def pointed_ball_traces(cloud: PointCloud, pointed: Sequence[int], radii=None,
                        radii_sq=None) -> list:
    """For each centre i and each radius, ``pointed[i]`` & (open ball about e_i)."""
    thresholds = _thresholds(cloud, radii, radii_sq)
    rank, cuts = _ball_levels(cloud, thresholds)
    out = []
    for i in range(len(cloud)):
        order = np.argsort(rank[i], kind="stable")
        prefix, acc, k = {}, 0, 0
        levels = sorted(set(cuts))
        for cut in levels:
            while k < len(order) and rank[i, order[k]] < cut:
                acc |= 1 << int(order[k])
                k += 1
            prefix[cut] = acc
        out.append([prefix[c] & pointed[i] for c in cuts])
    return out


def pointed_ball_family(cloud: PointCloud, pointed: Sequence[int], radii=None,
                        radii_sq=None) -> SetFamily:
    traces = pointed_ball_traces(cloud, pointed, radii, radii_sq)
    return SetFamily(len(cloud), tuple(m for row in traces for m in row))


def ball_family(cloud: PointCloud, radii=None, *, radii_sq=None) -> SetFamily:
    """Traces of open Euclidean balls about every event.

    With no radii, every distinct pairwise distance is used, which realises
    every possible trace.
    """
    return pointed_ball_family(cloud, [cloud.universe] * len(cloud), radii, radii_sq)


def zeeman_trace_family(cloud: PointCloud, kind, radii=None, *, radii_sq=None) -> SetFamily:
    return pointed_ball_family(cloud, cone_filter_sets(cloud, kind), radii, radii_sq)


def matched_intersection_family(cloud: PointCloud, order, frame: PartitionFrame | None = None,
                                radii=None, *, radii_sq=None,
                                include_null: bool = True) -> SetFamily:
    """{(X - future(x)) & (X - past(x)) & ball(x, r)}: interval sets cut by balls at the same centre."""
    pointed = pointed_interval_sets(cloud, order, frame, include_null)
    return pointed_ball_family(cloud, pointed, radii, radii_sq)
