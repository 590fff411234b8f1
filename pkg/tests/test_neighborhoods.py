from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zeeman.minkowski import ConeClass, Event, NumericMode, event
from zeeman.neighborhoods import (
    Axis,
    Polyline,
    TopologyKind,
    axis_trace,
    nbhd_contains,
    null_axis,
    path_check,
    space_axis,
    time_axis,
)

T = TopologyKind
ORIGIN = event([0, 0, 0, 0])
FLOAT = NumericMode.approx(1e-9)

coord = st.fractions(min_value=-3, max_value=3, max_denominator=3)
events = st.lists(coord, min_size=4, max_size=4).map(lambda c: Event(tuple(c)))
radii = st.fractions(min_value=Fraction(1, 10), max_value=6, max_denominator=10)


def test_membership_examples():
    assert nbhd_contains(T.ZT, ORIGIN, 2, event([1, 0, 0, 0]))
    assert not nbhd_contains(T.ZT, ORIGIN, 2, event([0, 1, 0, 0]))
    assert not nbhd_contains(T.Z, ORIGIN, 2, event([1, 1, 0, 0]))
    assert nbhd_contains(T.ZS, ORIGIN, 2, event([0, 1, 0, 0]))
    assert not nbhd_contains(T.ZS, ORIGIN, 2, event([1, 0, 0, 0]))
    assert nbhd_contains(T.EUCLID, ORIGIN, 2, event([1, 1, 0, 0]))


def test_nonpositive_radius_rejected():
    with pytest.raises(ValueError):
        nbhd_contains(T.Z, ORIGIN, 0, ORIGIN)


@given(events, radii, events)
def test_zt_union_zs_is_z(x, eps, y):
    zt, zs, z = (nbhd_contains(k, x, eps, y) for k in (T.ZT, T.ZS, T.Z))
    assert (zt or zs) == z
    assert not (zt and zs) or x == y


@given(events, radii, radii, events, st.sampled_from(list(T)))
def test_monotone_in_radius(x, a, b, y, kind):
    lo, hi = min(a, b), max(a, b)
    if nbhd_contains(kind, x, lo, y):
        assert nbhd_contains(kind, x, hi, y)


@given(events, radii, events)
def test_centre_kept_and_inclusions(x, eps, y):
    for k in T:
        assert nbhd_contains(k, x, eps, x)
    if nbhd_contains(T.Z, x, eps, y):
        assert nbhd_contains(T.EUCLID, x, eps, y)
    for k in (T.ZT, T.ZS):
        if nbhd_contains(k, x, eps, y):
            assert nbhd_contains(T.Z, x, eps, y)


# ---- axes --------------------------------------------------------------------

@pytest.mark.parametrize("kind, axis, singleton, interval", [
    (T.ZT, space_axis([0, 1, 0, 0]), True, False),
    (T.ZT, time_axis([1, 0, 0, 0]), False, True),
    (T.ZS, time_axis([2, 1, 0, 0]), True, False),
    (T.ZS, space_axis([1, 0, 2, 0]), False, True),
    (T.Z, null_axis([1, 0, 0, 1]), True, False),
    (T.Z, time_axis([1, 0, 0, 0]), False, True),
    (T.EUCLID, null_axis([1, 1, 0, 0]), False, True),
])
def test_axis_traces(kind, axis, singleton, interval):
    tr = axis_trace(kind, event([1, 2, 3, 4]), 3, axis)
    assert tr.trace_is_singleton is singleton
    assert tr.trace_is_euclidean_interval is interval
    assert len(tr.parameters) == 101


def test_axis_direction_type_checked():
    with pytest.raises(ValueError):
        Axis("time", (0, 1, 0, 0))
    with pytest.raises(ValueError):
        Axis("null", (1, 0, 0, 0))


def test_axis_trace_needs_three_samples():
    with pytest.raises(ValueError):
        axis_trace(T.ZT, ORIGIN, 1, time_axis([1, 0, 0, 0]), samples=2)


# ---- paths -------------------------------------------------------------------

def test_float_zigzag():
    p = Polyline((event([0, 0, 0, 0], FLOAT), event([1, 0, 0, 0], FLOAT), event([0, 0.5, 0, 0], FLOAT)))
    r = path_check(p, T.ZT, FLOAT)
    assert r.continuous and r.zigzag
    assert r.segment_classes == (ConeClass.TIMELIKE_FUTURE, ConeClass.TIMELIKE_PAST)


def test_null_segment_breaks_zt_and_z():
    p = Polyline((ORIGIN, event([1, 1, 0, 0])))
    assert not path_check(p, T.ZT).continuous
    assert not path_check(p, T.Z).continuous
    assert path_check(p, T.EUCLID).continuous


def test_spacelike_path_is_zs_continuous():
    p = Polyline((ORIGIN, event([0, 1, 0, 0]), event([0, 2, 1, 0])))
    assert path_check(p, T.ZS).continuous
    assert not path_check(p, T.ZT).continuous


def test_polyline_rejects_repeated_vertex():
    with pytest.raises(ValueError):
        Polyline((ORIGIN, ORIGIN))
    with pytest.raises(ValueError):
        Polyline((ORIGIN,))


@given(st.lists(events, min_size=2, max_size=6, unique=True))
def test_never_both_zt_and_zs_continuous(vs):
    if any(a == b for a, b in zip(vs, vs[1:])):
        return
    p = Polyline(tuple(vs))
    assert not (path_check(p, T.ZT).continuous and path_check(p, T.ZS).continuous)
