import pytest
from hypothesis import given, strategies as st

from zeeman.minkowski import ConeClass, Event, PartitionFrame, classify_pair, event, global_frame
from zeeman.relations import RelationKind, future_set, past_set, relates

K = RelationKind
ORIGIN = event([0, 0, 0, 0])
E1 = global_frame([1, 0, 0])

coord = st.fractions(min_value=-3, max_value=3, max_denominator=2)
events = st.lists(coord, min_size=4, max_size=4).map(lambda c: Event(tuple(c)))
frames = st.lists(st.integers(-2, 2), min_size=3, max_size=3).filter(any).map(global_frame)


def test_relates_examples():
    assert relates(K.CHRON, ORIGIN, event([2, 1, 0, 0]))
    assert relates(K.CAUSAL, ORIGIN, ORIGIN)
    assert not relates(K.CHRON, ORIGIN, ORIGIN)
    assert relates(K.SPACE_ORDER, ORIGIN, event([0, 2, 0, 0]), E1)
    assert not relates(K.SPACE_ORDER, ORIGIN, event([0, -2, 0, 0]), E1)


def test_horismos_variants():
    y = event([-1, 1, 0, 0])
    assert relates(K.HORISMOS_IRR, ORIGIN, y)      # either orientation
    assert not relates(K.HORISMOS, ORIGIN, y)
    assert relates(K.HORISMOS, ORIGIN, ORIGIN)
    assert not relates(K.HORISMOS_IRR, ORIGIN, ORIGIN)
    assert relates(K.CHRON_EQ, ORIGIN, y)


def test_frame_required_exactly_for_space_order():
    with pytest.raises(ValueError):
        relates(K.SPACE_ORDER, ORIGIN, event([0, 1, 0, 0]))
    with pytest.raises(ValueError):
        relates(K.CHRON, ORIGIN, event([1, 0, 0, 0]), E1)


CLOUD = [event([1, 0, 0, 0]), event([0, 1, 0, 0]), event([1, 1, 0, 0])]


def test_future_sets():
    assert future_set(K.CHRON, ORIGIN, CLOUD) == (CLOUD[0],)
    assert set(future_set(K.SPACE_ORDER, ORIGIN, CLOUD, E1)) == {CLOUD[1], CLOUD[2]}
    assert set(future_set(K.CHRON_EQ, ORIGIN, CLOUD)) == {CLOUD[0], CLOUD[2]}


def test_past_sets():
    assert past_set(K.CHRON, ORIGIN, [event([-1, 0, 0, 0])]) == (event([-1, 0, 0, 0]),)
    assert past_set(K.SPACE_ORDER, ORIGIN, [event([0, -1, 0, 0])], E1) == (event([0, -1, 0, 0]),)
    assert past_set(K.HORISMOS, ORIGIN, [ORIGIN]) == (ORIGIN,)


@given(events, events, frames)
def test_space_and_chron_eq_meet_in_light_cone(x, y, f):
    s = relates(K.SPACE_ORDER, x, y, f) or relates(K.SPACE_ORDER, y, x, f)
    c = relates(K.CHRON_EQ, x, y) or relates(K.CHRON_EQ, y, x)
    assert (s and c) == relates(K.HORISMOS_IRR, x, y)


@given(events, events, events)
def test_transitivity(x, y, z):
    for k in (K.CHRON, K.CAUSAL):
        if relates(k, x, y) and relates(k, y, z):
            assert relates(k, x, z)


@given(events, events)
def test_inclusions(x, y):
    if relates(K.CHRON, x, y):
        assert relates(K.CAUSAL, x, y)
        assert not relates(K.HORISMOS_IRR, x, y)


@given(events, st.lists(events, max_size=8), frames, frames)
def test_symmetric_part_of_eq1_is_frame_free(x, cloud, f, g):
    def both(frame):
        return set(future_set(K.SPACE_ORDER, x, cloud, frame)) | set(past_set(K.SPACE_ORDER, x, cloud, frame))
    expected = {y for y in cloud if classify_pair(x, y) in
                (ConeClass.SPACELIKE, ConeClass.NULL_FUTURE, ConeClass.NULL_PAST)}
    assert both(f) == both(g) == expected


def test_per_event_frame_space_order():
    f = PartitionFrame((1, 0, 0), per_event={0: (0, 0, 1)})
    x = event([0, 0, 0, 0], id=0)
    assert relates(K.SPACE_ORDER, x, event([0, -1, 0, 1]), f)
