"""Basic open sets of the Euclidean, Z, ZT and ZS topologies.

Every basic set is an open Euclidean ball about a centre x cut down by a
cone filter, with x itself always kept:

    euclid  ball
    zt      ball and (y = x or y timelike to x)
    zs      ball and (y = x or y spacelike to x)
    z       ball minus the light cone of x
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .minkowski import (
    EXACT,
    ConeClass,
    Event,
    NumericMode,
    _coords,
    classify_delta,
    classify_pair,
    squared_distance,
    to_scalar,
)


class TopologyKind(str, enum.Enum):
    EUCLID = "euclid"
    Z = "z"
    ZT = "zt"
    ZS = "zs"


def cone_filter(kind: TopologyKind, cls: ConeClass) -> bool:
    kind = TopologyKind(kind)
    if cls is ConeClass.EQUAL or kind is TopologyKind.EUCLID:
        return True
    if kind is TopologyKind.ZT:
        return cls.timelike
    if kind is TopologyKind.ZS:
        return cls is ConeClass.SPACELIKE
    return not cls.null


def nbhd_contains_sq(kind, center, eps_sq, y, mode: NumericMode = EXACT) -> bool:
    """As :func:`nbhd_contains` with the squared radius given directly."""
    if not eps_sq > 0:
        raise ValueError("radius must be positive")
    if not squared_distance(center, y) < eps_sq:
        return False
    return cone_filter(kind, classify_pair(center, y, mode))


def nbhd_contains(kind: TopologyKind | str, center, epsilon, y,
                  mode: NumericMode = EXACT) -> bool:
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    return nbhd_contains_sq(kind, center, epsilon * epsilon, y, mode)


# --------------------------------------------------------------------------
# traces on straight lines


@dataclass(frozen=True)
class Axis:
    """Straight line through a centre; ``kind`` is 'time', 'space' or 'null'."""

    kind: str
    direction: tuple

    def __post_init__(self):
        expected = {"time": "timelike", "space": "spacelike", "null": "null"}
        if self.kind not in expected:
            raise ValueError(f"unknown axis kind {self.kind!r}")
        cls = classify_delta(self.direction, EXACT if not any(
            isinstance(c, float) for c in self.direction) else NumericMode.approx(1e-12))
        actual = ("timelike" if cls.timelike else "null" if cls.null
                  else "spacelike" if cls is ConeClass.SPACELIKE else "zero")
        if actual != expected[self.kind]:
            raise ValueError(f"{self.kind} axis needs a {expected[self.kind]} direction, "
                             f"got a {actual} one")


def time_axis(direction: Sequence) -> Axis:
    return Axis("time", tuple(direction))


def space_axis(direction: Sequence) -> Axis:
    return Axis("space", tuple(direction))


def null_axis(direction: Sequence) -> Axis:
    return Axis("null", tuple(direction))


@dataclass(frozen=True)
class AxisTrace:
    parameters: tuple
    members: tuple
    trace_is_singleton: bool
    trace_is_euclidean_interval: bool


def axis_trace(kind, center: Event, epsilon, axis: Axis, samples: int = 101,
               mode: NumericMode = EXACT) -> AxisTrace:
    """Sample the basic set at ``center`` along ``axis``.

    Points are center + t * direction for ``samples`` evenly spaced t in
    [-epsilon, epsilon] (t = 0 always included); the ball radius is
    epsilon * |direction|, so t measures arc length in units of the
    direction vector and the endpoints sit on the ball's boundary.
    """
    if samples < 3:
        raise ValueError("need at least 3 samples")
    c = _coords(center)
    if len(axis.direction) != len(c):
        raise ValueError("axis direction has the wrong dimension")
    eps = to_scalar(epsilon, mode)
    if not eps > 0:
        raise ValueError("epsilon must be positive")
    direction = tuple(to_scalar(v, mode) for v in axis.direction)
    eps_sq = eps * eps * sum(v * v for v in direction)
    if mode.exact:
        ts = {eps * Fraction(2 * k - (samples - 1), samples - 1) for k in range(samples)}
    else:
        ts = {eps * (2 * k - (samples - 1)) / (samples - 1) for k in range(samples)}
    ts = sorted(ts | {eps * 0})
    members = tuple(
        nbhd_contains_sq(kind, c, eps_sq, [a + t * v for a, v in zip(c, direction)], mode)
        for t in ts)
    zero = ts.index(0)
    inside = [i for i, m in enumerate(members) if m]
    singleton = inside == [zero]
    contiguous = bool(inside) and inside == list(range(inside[0], inside[-1] + 1))
    interval = contiguous and zero in inside and len(inside) > 1
    return AxisTrace(tuple(ts), members, singleton, interval)


# --------------------------------------------------------------------------
# polylines


@dataclass(frozen=True)
class Polyline:
    vertices: tuple

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Event) else Event(tuple(v)) for v in self.vertices)
        if len(verts) < 2:
            raise ValueError("a polyline needs at least two vertices")
        if len({v.dim for v in verts}) != 1:
            raise ValueError("polyline vertices differ in dimension")
        for a, b in zip(verts, verts[1:]):
            if a.same_point(b):
                raise ValueError("consecutive polyline vertices must be distinct")
        object.__setattr__(self, "vertices", verts)


@dataclass(frozen=True)
class PathReport:
    continuous: bool
    segment_classes: tuple
    zigzag: bool


_ALLOWED = {
    TopologyKind.ZT: lambda c: c.timelike,
    TopologyKind.ZS: lambda c: c is ConeClass.SPACELIKE,
    TopologyKind.Z: lambda c: not c.null,
    TopologyKind.EUCLID: lambda c: True,
}

_FUTURE = (ConeClass.TIMELIKE_FUTURE, ConeClass.NULL_FUTURE)
_PAST = (ConeClass.TIMELIKE_PAST, ConeClass.NULL_PAST)


def path_check(path: Polyline, kind, mode: NumericMode = EXACT) -> PathReport:
    """Continuity of a polyline under ``kind``, decided segment by segment.

    Under ZT a straight segment is continuous exactly when it runs along a
    time axis, so a ZT-continuous polyline is a chain of timelike segments;
    ``zigzag`` flags a reversal of time orientation between consecutive
    segments.
    """
    kind = TopologyKind(kind)
    verts = path.vertices
    classes = tuple(classify_pair(a, b, mode) for a, b in zip(verts, verts[1:]))
    continuous = all(_ALLOWED[kind](c) for c in classes)
    zigzag = any((a in _FUTURE and b in _PAST) or (a in _PAST and b in _FUTURE)
                 for a, b in zip(classes, classes[1:]))
    return PathReport(continuous, classes, zigzag)
