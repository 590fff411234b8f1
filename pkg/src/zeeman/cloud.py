"""Sprinkled point clouds and their pairwise causal data.

The pairwise arrays are computed once per cloud.  In exact mode all
coordinates are rescaled by the least common denominator to Python ints
held in object arrays, which keeps every sign and every distance
comparison exact while letting numpy do the looping.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from .minkowski import (
    EXACT,
    ConeClass,
    DimensionError,
    Event,
    NumericMode,
    PartitionFrame,
    Transform,
    apply_transform,
    to_scalar,
)
from .relations import RelationKind

# integer codes used in the class matrix
CLASS_ORDER = (
    ConeClass.EQUAL,
    ConeClass.TIMELIKE_FUTURE,
    ConeClass.TIMELIKE_PAST,
    ConeClass.NULL_FUTURE,
    ConeClass.NULL_PAST,
    ConeClass.SPACELIKE,
)
EQ, TF, TP, NF, NP, SP = range(6)


def unit_box(dim: int, mode: NumericMode = EXACT) -> tuple:
    lo, hi = to_scalar(-1, mode), to_scalar(1, mode)
    return tuple((lo, hi) for _ in range(dim))


@dataclass(frozen=True)
class PointCloud:
    events: tuple
    mode: NumericMode = EXACT
    box: tuple | None = None
    seed: int | None = None

    def __post_init__(self):
        events = tuple(self.events)
        if not events:
            raise ValueError("a point cloud needs at least one event")
        dims = {e.dim for e in events}
        if len(dims) != 1:
            raise DimensionError(f"mixed dimensions in cloud: {sorted(dims)}")
        events = tuple(Event(tuple(to_scalar(c, self.mode) for c in e.coords), i)
                       for i, e in enumerate(events))
        object.__setattr__(self, "events", events)
        if self.box is not None:
            box = tuple((to_scalar(lo, self.mode), to_scalar(hi, self.mode)) for lo, hi in self.box)
            if len(box) != self.dim:
                raise DimensionError("box dimension differs from event dimension")
            for e in events:
                if not all(lo <= c <= hi for c, (lo, hi) in zip(e.coords, box)):
                    raise ValueError(f"event {e.id} lies outside the box")
            object.__setattr__(self, "box", box)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __getitem__(self, i) -> Event:
        return self.events[i]

    @property
    def dim(self) -> int:
        return self.events[0].dim

    @property
    def universe(self) -> int:
        return (1 << len(self.events)) - 1

    def transformed(self, g: Transform) -> "PointCloud":
        return PointCloud(tuple(apply_transform(g, e) for e in self.events), self.mode,
                          None, self.seed)

    @cached_property
    def geometry(self) -> "Geometry":
        return Geometry(self)


class Geometry:
    """Pairwise arrays; entry (i, j) always describes the pair (x = e_i, y = e_j)."""

    def __init__(self, cloud: PointCloud):
        self.cloud = cloud
        self.n = len(cloud)
        self.mode = cloud.mode
        if cloud.mode.exact:
            coords = [[Fraction(c) for c in e.coords] for e in cloud.events]
            lcd = math.lcm(*(c.denominator for row in coords for c in row))
            x = np.empty((self.n, cloud.dim), dtype=object)
            for i, row in enumerate(coords):
                for k, c in enumerate(row):
                    x[i, k] = c.numerator * (lcd // c.denominator)
            self.unit2 = lcd * lcd   # squared length of one coordinate unit
        else:
            x = np.array([e.coords for e in cloud.events], dtype=float)
            self.unit2 = 1.0
        self.coords = x
        self.delta = x[None, :, :] - x[:, None, :]
        sq = self.delta * self.delta
        self.q = sq[..., 0] - sq[..., 1:].sum(axis=-1) if cloud.dim > 1 else sq[..., 0]
        self.d2 = sq.sum(axis=-1)
        self.cls = self._classify()
        self._sides = {}

    def _classify(self) -> np.ndarray:
        q, d2, t = self.q, self.d2, self.delta[..., 0]
        zero = d2 == 0
        if self.mode.exact:
            null = (q == 0) & ~zero
            pos = q > 0
        else:
            null = (np.abs(q) <= self.mode.null_tolerance * d2) & ~zero
            pos = (q > 0) & ~null
        fut = t > 0
        cls = np.full((self.n, self.n), SP, dtype=np.int8)
        cls[pos & fut] = TF
        cls[pos & ~fut] = TP
        cls[null & fut] = NF
        cls[null & ~fut] = NP
        cls[np.asarray(zero, dtype=bool)] = EQ
        return cls

    def class_matrix(self) -> list:
        return [[CLASS_ORDER[c] for c in row] for row in self.cls]

    @cached_property
    def distinct_d2(self) -> list:
        """Sorted distinct nonzero squared distances, in scaled units."""
        return sorted({v for v in self.d2.ravel().tolist() if v != 0})

    def eps_sq_scaled(self, epsilon) -> object:
        """Convert a radius in cloud coordinates to a squared threshold in scaled units."""
        if not epsilon > 0:
            raise ValueError(f"radius must be positive, got {epsilon!r}")
        e = to_scalar(epsilon, self.mode)
        return e * e * self.unit2

    def side_matrix(self, frame: PartitionFrame) -> np.ndarray:
        """+1 / -1 for spacelike pairs on the positive / negative side, 0 elsewhere."""
        if frame.dim != self.cloud.dim:
            raise DimensionError(f"frame is for dimension {frame.dim}, cloud has {self.cloud.dim}")
        key = frame.key
        if key not in self._sides:
            self._sides[key] = self._side_matrix(frame)
        return self._sides[key]

    def _side_matrix(self, frame: PartitionFrame) -> np.ndarray:
        exact = self.mode.exact
        delta = self.delta
        if frame.pullback is not None:
            pull = _integral(frame.pullback) if exact else frame.pullback
            delta = delta @ np.array(pull, dtype=object if exact else float).T
        spatial = delta[..., 1:]
        side = np.zeros((self.n, self.n), dtype=np.int8)
        rows = {}
        for i, e in enumerate(self.cloud.events):
            rows.setdefault(frame.basis_at(e), []).append(i)
        for basis, idx in rows.items():
            # positive rescaling of each basis vector leaves every sign alone
            b = np.array([_integral([v])[0] for v in basis] if exact else basis,
                         dtype=object if exact else float).T
            ips = spatial[idx] @ b
            signs = (ips > 0).astype(np.int8) - (ips < 0).astype(np.int8)
            first = np.argmax(signs != 0, axis=-1)
            side[idx] = np.take_along_axis(signs, first[..., None], axis=-1)[..., 0]
        side[self.cls != SP] = 0
        return side


def _integral(rows) -> list:
    """Rational matrix times a positive common denominator, as Python ints."""
    rows = [[Fraction(c) for c in r] for r in rows]
    lcd = math.lcm(*(c.denominator for r in rows for c in r))
    return [[int(c * lcd) for c in r] for r in rows]


def relation_matrix(cloud: PointCloud, kind, frame: PartitionFrame | None = None) -> np.ndarray:
    """Boolean N x N matrix with entry (i, j) = relates(kind, e_i, e_j)."""
    kind = RelationKind(kind)
    if kind.needs_frame != (frame is not None):
        raise ValueError("a frame is needed exactly for space-order")
    cls = cloud.geometry.cls
    null = (cls == NF) | (cls == NP)
    if kind is RelationKind.CHRON:
        return cls == TF
    if kind is RelationKind.CAUSAL:
        return (cls == TF) | (cls == NF) | (cls == EQ)
    if kind is RelationKind.HORISMOS:
        return (cls == NF) | (cls == EQ)
    if kind is RelationKind.HORISMOS_IRR:
        return null
    if kind is RelationKind.CHRON_EQ:
        return (cls == TF) | null
    return null | (cloud.geometry.side_matrix(frame) > 0)


def null_pair_count(cloud: PointCloud) -> int:
    cls = cloud.geometry.cls
    return int(np.triu((cls == NF) | (cls == NP), 1).sum())


# --------------------------------------------------------------------------
# sprinkling

_GRID = 1 << 16


def _random_unit_spatial(rng, n: int) -> list:
    """Rational point on the unit sphere in R^n (inverse stereographic projection)."""
    if n == 1:
        return [Fraction(1 if rng.random() < 0.5 else -1)]
    w = [Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 5))) for _ in range(n - 1)]
    w2 = sum(c * c for c in w)
    v = [(w2 - 1) / (w2 + 1)] + [2 * c / (w2 + 1) for c in w]
    perm = rng.permutation(n)
    return [v[int(k)] for k in perm]


def _feasible_interval(anchor, direction, box):
    lo_s, hi_s = None, None
    for a, k, (lo, hi) in zip(anchor, direction, box):
        if k == 0:
            continue
        s1, s2 = (lo - a) / k, (hi - a) / k
        s1, s2 = min(s1, s2), max(s1, s2)
        lo_s = s1 if lo_s is None else max(lo_s, s1)
        hi_s = s2 if hi_s is None else min(hi_s, s2)
    return lo_s, hi_s


def sprinkle(box: Sequence | None = None, count: int = 16, seed: int = 0,
             mode: NumericMode = EXACT, null_pair_fraction: float = 0.0,
             null_line_length: int = 16, dim: int | None = None) -> PointCloud:
    """Uniform i.i.d. events in ``box``, some then moved onto light cones.

    A ``null_pair_fraction`` share of the events (never event 0) is moved
    onto null lines through earlier events.  Up to ``null_line_length``
    moved events share one null line, so all pairs on a line are mutually
    null; this keeps horismos well represented even for large clouds.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if box is None:
        box = unit_box(dim or 4, mode)
    box = tuple((to_scalar(lo, EXACT), to_scalar(hi, EXACT)) for lo, hi in box)
    if len(box) < 2:
        raise DimensionError("spacetime dimension must be at least 2")
    if any(not lo < hi for lo, hi in box):
        raise ValueError("empty box")
    if not 0 <= null_pair_fraction <= 1:
        raise ValueError("null_pair_fraction must lie in [0, 1]")
    if null_line_length < 1:
        raise ValueError("null_line_length must be positive")
    d = len(box)
    rng = np.random.default_rng(seed)
    pts = [[lo + (hi - lo) * Fraction(int(rng.integers(0, _GRID + 1)), _GRID) for lo, hi in box]
           for _ in range(count)]

    n_null = min(count - 1, round(null_pair_fraction * count))
    moved = sorted(int(i) for i in rng.choice(np.arange(1, count), size=n_null, replace=False)) \
        if n_null else []
    line = None
    for i in moved:
        while line is None or len(line["params"]) > null_line_length:
            anchor = pts[int(rng.integers(0, i))]
            direction = [Fraction(1)] + _random_unit_spatial(rng, d - 1)
            lo_s, hi_s = _feasible_interval(anchor, direction, box)
            # an anchor on the box corner can leave no room along the line
            line = {"anchor": anchor, "dir": direction, "params": {Fraction(0)},
                    "range": (lo_s, hi_s)} if lo_s < hi_s else None
        lo_s, hi_s = line["range"]
        for _ in range(64):
            s = lo_s + (hi_s - lo_s) * Fraction(int(rng.integers(1, 1 << 12)), 1 << 12)
            if s not in line["params"]:
                break
        else:
            raise RuntimeError("could not place a point on the null line")
        line["params"].add(s)
        pts[i] = [a + s * k for a, k in zip(line["anchor"], line["dir"])]

    events = tuple(Event(tuple(to_scalar(c, mode) for c in p), i) for i, p in enumerate(pts))
    return PointCloud(events, mode, tuple((to_scalar(lo, mode), to_scalar(hi, mode))
                                          for lo, hi in box), seed)
