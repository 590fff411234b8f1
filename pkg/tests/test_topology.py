from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zeeman.cloud import PointCloud, sprinkle, unit_box
from zeeman.minkowski import EXACT, event, global_frame
from zeeman.neighborhoods import TopologyKind, nbhd_contains
from zeeman.verify import probe_radii_sq
from zeeman.topology import (
    Comparison,
    FiniteTopology,
    IntervalOrder,
    SetFamily,
    ball_family,
    bits,
    compare_topologies,
    from_indices,
    generate_topology,
    intersection_topology,
    interval_subbasis,
    matched_intersection_family,
    pointed_ball_traces,
    pointed_interval_sets,
    cone_filter_sets,
    zeeman_trace_family,
)

O = IntervalOrder


def fam(n, *sets):
    return SetFamily(n, tuple(from_indices(s) for s in sets))


families = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.integers(0, (1 << n) - 1), max_size=8).map(lambda ms: SetFamily(n, tuple(ms))))


def brute_topology(sub: SetFamily) -> set:
    """All open sets: close under pairwise intersection, then under pairwise union."""
    opens = {sub.universe} | set(sub.members)
    for op in (lambda a, b: a & b, lambda a, b: a | b):
        grown = True
        while grown:
            new = {op(a, b) for a in opens for b in opens} - opens
            grown = bool(new)
            opens |= new
    return opens | {0}


# ---- set families and generation ------------------------------------------

def test_family_dedups_and_validates():
    f = fam(3, [0], [0], [1, 2])
    assert f.to_lists() == [[0], [1, 2]]
    with pytest.raises(ValueError):
        SetFamily(2, (0b100,))


def test_generate_examples():
    assert generate_topology(SetFamily(3, ())).min_open == (0b111,) * 3
    assert generate_topology(fam(3, [0], [1], [2])).is_discrete()


def test_two_point_chron_subbasis():
    c = PointCloud((event([0, 0, 0, 0]), event([1, 0, 0, 0])))
    assert interval_subbasis(c, O.CHRON).to_lists() == [[0], [0, 1], [1]]


def test_three_chain_isolates_middle():
    c = PointCloud((event([0, 0]), event([1, 0]), event([2, 0])))
    t = generate_topology(interval_subbasis(c, O.CHRON))
    assert bits(t.min_open[1]) == [1]


@settings(max_examples=60, deadline=None)
@given(families)
def test_generate_matches_exhaustive_closure(sub):
    t = generate_topology(sub)
    opens = brute_topology(sub)
    for p in range(sub.universe_size):
        containing = [m for m in opens if m >> p & 1]
        smallest = sub.universe
        for m in containing:
            smallest &= m
        assert t.min_open[p] == smallest


@given(families)
def test_min_open_coherence_and_idempotence(sub):
    t = generate_topology(sub)
    for p, m in enumerate(t.min_open):
        assert m >> p & 1
        for q in bits(m):
            assert t.min_open[q] & ~m == 0
    assert generate_topology(t.basis()) == t


def test_incoherent_topology_rejected():
    with pytest.raises(ValueError):
        FiniteTopology(2, (0b10, 0b10))


# ---- intersection and comparison -------------------------------------------

@given(families)
def test_intersection_identity_and_singletons(f):
    n = f.universe_size
    top = SetFamily(n, ((1 << n) - 1,))
    assert compare_topologies(generate_topology(intersection_topology(top, f)),
                              generate_topology(f)) is Comparison.EQUAL
    singles = SetFamily(n, tuple(1 << i for i in range(n)))
    assert intersection_topology(singles, singles) == singles


@given(families.flatmap(lambda f: st.tuples(st.just(f), st.lists(
    st.integers(0, f.universe - 1), max_size=6).map(lambda ms: SetFamily(f.universe_size, tuple(ms))))))
def test_intersection_commutes_and_matches_join(pair):
    a, b = pair
    ab, ba = intersection_topology(a, b), intersection_topology(b, a)
    assert ab == ba
    # the join's open sets are exactly the unions of opens of a and b intersected
    ta, tb = generate_topology(a), generate_topology(b)
    joined = generate_topology(ab)
    for p in range(a.universe_size):
        assert joined.min_open[p] == ta.min_open[p] & tb.min_open[p]


def test_intersection_universe_mismatch():
    with pytest.raises(ValueError):
        intersection_topology(SetFamily(2, ()), SetFamily(3, ()))


def test_compare_examples():
    disc = generate_topology(fam(3, [0], [1], [2]))
    indisc = generate_topology(SetFamily(3, ()))
    assert compare_topologies(disc, indisc) is Comparison.A_FINER
    assert compare_topologies(indisc, disc) is Comparison.B_FINER
    assert compare_topologies(disc, disc) is Comparison.EQUAL
    a = generate_topology(fam(3, [0, 1]))
    b = generate_topology(fam(3, [1, 2]))
    assert compare_topologies(a, b) is Comparison.INCOMPARABLE


# ---- ball and trace families -------------------------------------------------

def brute_ball_family(cloud, kind=None):
    pts = list(cloud)
    d2 = sorted({sum((a - b) ** 2 for a, b in zip(x.coords, y.coords)) for x in pts for y in pts} - {0})
    # every realisable trace appears at a radius between consecutive distances
    cut = [d2[0] / 2] + [(a + b) / 2 for a, b in zip(d2, d2[1:])] + [d2[-1] * 2]
    out = set()
    for x in pts:
        for r2 in cut:
            eps = Fraction(r2)
            if kind is None:
                members = [y.id for y in pts if sum((a - b) ** 2 for a, b in zip(x.coords, y.coords)) < eps]
            else:
                members = [y.id for y in pts if
                           sum((a - b) ** 2 for a, b in zip(x.coords, y.coords)) < eps and
                           nbhd_contains(kind, x, 10, y)]
            out.add(from_indices(members))
    return out


@pytest.mark.parametrize("seed", range(4))
def test_default_ball_family_matches_brute_force(seed):
    c = sprinkle(unit_box(4), 5, seed, EXACT, 0.4)
    assert set(ball_family(c).members) == brute_ball_family(c)
    for kind in (TopologyKind.ZT, TopologyKind.ZS, TopologyKind.Z):
        assert set(zeeman_trace_family(c, kind).members) == brute_ball_family(c, kind)


def test_ball_family_extremes():
    c = sprinkle(count=8, seed=1)
    assert set(ball_family(c, [Fraction(1, 10**6)]).members) == {1 << i for i in range(8)}
    assert ball_family(c, [100]).members == (c.universe,)
    with pytest.raises(ValueError):
        ball_family(c, [0])
    with pytest.raises(ValueError):
        ball_family(c, [])


def test_trace_family_against_membership_oracle():
    c = sprinkle(unit_box(2), 10, 4, EXACT, 0.3)
    for kind in TopologyKind:
        for r in (Fraction(1, 3), 1, 2):
            got = set(zeeman_trace_family(c, kind, [r]).members)
            want = {from_indices(y.id for y in c if nbhd_contains(kind, x, r, y)) for x in c}
            assert got == want


def test_z_traces_are_memberwise_unions():
    c = sprinkle(unit_box(4), 12, 6, EXACT, 0.3)
    radii = [Fraction(1, 2), 1, Fraction(3, 2)]
    zt = pointed_ball_traces(c, cone_filter_sets(c, "zt"), radii)
    zs = pointed_ball_traces(c, cone_filter_sets(c, "zs"), radii)
    z = pointed_ball_traces(c, cone_filter_sets(c, "z"), radii)
    for a, b, u in zip(zt, zs, z):
        assert [p | q for p, q in zip(a, b)] == u


# ---- interval families and the theorems on samples -----------------------------

@pytest.mark.parametrize("dim", [2, 4])
def test_pointed_interval_sets_are_cone_traces(dim):
    c = sprinkle(unit_box(dim), 24, 3, EXACT, 0.25)
    f = global_frame([1] + [0] * (dim - 2))
    assert pointed_interval_sets(c, O.SPACE_ORDER, f) == cone_filter_sets(c, "zt")
    assert pointed_interval_sets(c, O.CHRON_EQ) == cone_filter_sets(c, "zs")


@pytest.mark.parametrize("dim", [2, 4])
def test_matched_intersection_equals_zeeman_traces(dim):
    c = sprinkle(unit_box(dim), 16, 0, EXACT, 0.25)
    f = global_frame([1] + [0] * (dim - 2))
    for r in (None, [Fraction(1, 2)], [1]):
        zt = generate_topology(zeeman_trace_family(c, "zt", r))
        zs = generate_topology(zeeman_trace_family(c, "zs", r))
        assert compare_topologies(generate_topology(matched_intersection_family(c, O.SPACE_ORDER, f, r)), zt) \
            is Comparison.EQUAL
        assert compare_topologies(generate_topology(matched_intersection_family(c, O.CHRON_EQ, None, r)), zs) \
            is Comparison.EQUAL


def test_dropping_light_cone_changes_matched_traces():
    # at the default radii both sides are discrete, so single probe radii are used

    c = sprinkle(unit_box(4), 64, 0, EXACT, 0.25)
    seen = False
    for r2 in probe_radii_sq(c):
        zs = generate_topology(zeeman_trace_family(c, "zs", radii_sq=[r2]))
        bad = generate_topology(matched_intersection_family(c, O.CHRON_EQ, None, radii_sq=[r2],
                                                            include_null=False))
        seen |= compare_topologies(bad, zs) is not Comparison.EQUAL
    assert seen


def test_interval_topology_depends_on_frame_in_four_dimensions():
    # p, q timelike; r spacelike to both and on opposite e1-sides of them
    p = event([0, 0, 0, 0])
    q = event([1, Fraction(1, 2), 0, 0])
    r = event([Fraction(1, 2), Fraction(1, 4), 5, 0])
    c = PointCloud((p, q, r))
    e1 = generate_topology(interval_subbasis(c, O.SPACE_ORDER, global_frame([1, 0, 0])))
    e2 = generate_topology(interval_subbasis(c, O.SPACE_ORDER, global_frame([0, 1, 0])))
    assert bits(e1.min_open[1]) == [1]
    assert bits(e2.min_open[1]) == [0, 1]
    assert compare_topologies(e1, e2) is not Comparison.EQUAL


@pytest.mark.parametrize("seed", range(5))
def test_interval_topology_frame_free_in_two_dimensions(seed):
    c = sprinkle(unit_box(2), 32, seed, EXACT, 0.25)
    a = generate_topology(interval_subbasis(c, O.SPACE_ORDER, global_frame([1])))
    b = generate_topology(interval_subbasis(c, O.SPACE_ORDER, global_frame([-1])))
    assert compare_topologies(a, b) is Comparison.EQUAL
