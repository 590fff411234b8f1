"""Order relations between events and the up/down sets they define."""
from __future__ import annotations

import enum
from typing import Iterable

from .minkowski import (
    EXACT,
    ConeClass,
    Event,
    NumericMode,
    PartitionFrame,
    Side,
    classify_pair,
    partition_side,
)


class RelationKind(str, enum.Enum):
    CHRON = "chron"                # x << y
    CAUSAL = "causal"              # x < y, reflexive
    HORISMOS = "horismos"          # x -> y, reflexive
    HORISMOS_IRR = "horismos-irr"  # y on the light cone of x, y != x
    CHRON_EQ = "chron-eq"          # << union ->irr
    SPACE_ORDER = "space-order"    # x <= y: y in S+(x) or x ->irr y

    @property
    def needs_frame(self) -> bool:
        return self is RelationKind.SPACE_ORDER


def _check_frame(kind: RelationKind, frame):
    if kind.needs_frame and frame is None:
        raise ValueError("space-order needs a partition frame")
    if not kind.needs_frame and frame is not None:
        raise ValueError(f"{kind.value} takes no partition frame")


def relation_from_class(kind: RelationKind, cls: ConeClass, side: Side | None = None) -> bool:
    """Decide ``kind`` from the cone class of (x, y) and, for space-order, its side."""
    if kind is RelationKind.CHRON:
        return cls is ConeClass.TIMELIKE_FUTURE
    if kind is RelationKind.CAUSAL:
        return cls in (ConeClass.TIMELIKE_FUTURE, ConeClass.NULL_FUTURE, ConeClass.EQUAL)
    if kind is RelationKind.HORISMOS:
        return cls in (ConeClass.NULL_FUTURE, ConeClass.EQUAL)
    if kind is RelationKind.HORISMOS_IRR:
        return cls.null
    if kind is RelationKind.CHRON_EQ:
        return cls is ConeClass.TIMELIKE_FUTURE or cls.null
    if kind is RelationKind.SPACE_ORDER:
        return cls.null or (cls is ConeClass.SPACELIKE and side is Side.POSITIVE)
    raise ValueError(kind)


def relates(kind: RelationKind | str, x: Event, y: Event,
            frame: PartitionFrame | None = None, mode: NumericMode = EXACT) -> bool:
    kind = RelationKind(kind)
    _check_frame(kind, frame)
    cls = classify_pair(x, y, mode)
    side = None
    if kind.needs_frame and cls is ConeClass.SPACELIKE:
        side = partition_side(frame, x, y, mode)
    return relation_from_class(kind, cls, side)


def _past_from_class(kind: RelationKind, cls: ConeClass, side: Side | None) -> bool:
    # cls is the class of (x, y); y is in the past set of x
    if kind is RelationKind.SPACE_ORDER:
        return cls.null or (cls is ConeClass.SPACELIKE and side is Side.NEGATIVE)
    if kind is RelationKind.CHRON_EQ:
        return cls is ConeClass.TIMELIKE_PAST or cls.null
    return relation_from_class(kind, cls.reversed())


def _select(kind, x, cloud, frame, mode, past):
    kind = RelationKind(kind)
    _check_frame(kind, frame)
    events = getattr(cloud, "events", cloud)
    if mode is None:
        mode = getattr(cloud, "mode", EXACT)
    out = []
    for y in events:
        cls = classify_pair(x, y, mode)
        side = None
        if kind.needs_frame and cls is ConeClass.SPACELIKE:
            side = partition_side(frame, x, y, mode)
        hit = _past_from_class(kind, cls, side) if past else relation_from_class(kind, cls, side)
        if hit:
            out.append(y)
    return tuple(out)


def future_set(kind, x: Event, cloud: Iterable[Event], frame=None,
               mode: NumericMode | None = None) -> tuple:
    """Events y of ``cloud`` in the future set of x.

    For space-order this is S+(x): the positive half of the space cone plus
    the light cone, x itself excluded.  For chron-eq it is the chronological
    future plus the light cone, x excluded.  The other kinds give the
    standard futures {y : x R y}.
    """
    return _select(kind, x, cloud, frame, mode, past=False)


def past_set(kind, x: Event, cloud: Iterable[Event], frame=None,
             mode: NumericMode | None = None) -> tuple:
    """Mirror of :func:`future_set`: negative half / pasts."""
    return _select(kind, x, cloud, frame, mode, past=True)
