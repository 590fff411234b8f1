from fractions import Fraction
import json

import pytest

from zeeman.cloud import PointCloud, sprinkle, unit_box
from zeeman.minkowski import EXACT, boost, event, identity, random_transform, time_reflection
from zeeman.verify import (
    SuiteConfig,
    VerificationReport,
    canonical_paths,
    random_zigzag,
    run_suite,
    standard_frames,
    verify_axis_and_paths,
    verify_corollary_union,
    verify_intersection_theorems,
    verify_order_intersection,
    verify_partition_invariance,
    verify_symmetry,
)


@pytest.fixture(scope="module")
def cloud4():
    return sprinkle(unit_box(4), 16, 0, EXACT, 0.25)


@pytest.fixture(scope="module")
def cloud2():
    return sprinkle(unit_box(2), 16, 0, EXACT, 0.25)


def test_report_json_shape():
    r = VerificationReport("V1", config={"a": 1})
    assert r.passed
    r.fail("broken", [event([0, 0])])
    out = r.to_json()
    assert set(out) == {"property", "pass", "counterexamples", "config", "stats"}
    assert out["pass"] is False and out["counterexamples"][0]["events"][0]["coords"] == ["0", "0"]


def test_report_caps_counterexamples():
    r = VerificationReport("V1")
    for _ in range(15):
        r.fail("x")
    assert len(r.counterexamples) == 10 and r.stats["counterexamples_dropped"] == 5


def test_v1_passes_and_mutation_detected(cloud4):
    assert verify_corollary_union(cloud4).passed
    assert not verify_corollary_union(cloud4, mutate="z-keeps-light-cone").passed


def test_v2_passes_on_null_rich_cloud(cloud4):
    r = verify_order_intersection(cloud4, standard_frames(cloud4))
    assert r.passed and r.stats["null_pairs"] > 0


def test_v2_hand_built_null_pair():
    c = PointCloud((event([0, 0, 0, 0]), event([1, 1, 0, 0]), event([5, 0, 0, 0])))
    r = verify_order_intersection(c, standard_frames(c))
    assert r.passed and r.stats["null_pairs"] == 3


def test_v3_passes_in_two_dimensions(cloud2):
    assert verify_partition_invariance(cloud2, standard_frames(cloud2)).passed


def test_v3_same_frame_twice(cloud4):
    f = standard_frames(cloud4)[0]
    assert verify_partition_invariance(cloud4, [f, f]).passed


def test_v3_reports_frame_dependence_in_four_dimensions():
    c = PointCloud((event([0, 0, 0, 0]), event([1, Fraction(1, 2), 0, 0]),
                    event([Fraction(1, 2), Fraction(1, 4), 5, 0])))
    r = verify_partition_invariance(c, standard_frames(c, seed=0)[:2])
    assert not r.passed
    assert "interval topologies of two frames" in r.counterexamples[0]["detail"]


@pytest.mark.parametrize("fixture", ["cloud2", "cloud4"])
def test_v4_passes(fixture, request):
    c = request.getfixturevalue(fixture)
    assert verify_intersection_theorems(c, standard_frames(c)).passed


def test_v4_tiny_radius_is_trivially_equal(cloud4):
    assert verify_intersection_theorems(cloud4, standard_frames(cloud4), radii=[Fraction(1, 10**6)],
                                        probes=[]).passed


@pytest.mark.parametrize("mutate", ["eq1-drop-null", "eq2-drop-null"])
def test_v4_mutations_detected(mutate):
    c = sprinkle(unit_box(4), 64, 0, EXACT, 0.25)
    assert not verify_intersection_theorems(c, standard_frames(c), mutate=mutate).passed


def test_v5_identity_and_boost(cloud4):
    frames = standard_frames(cloud4)
    assert verify_symmetry(cloud4, [identity(4), boost(4, 1, Fraction(3, 5))], frames).passed
    assert verify_symmetry(cloud4, [random_transform(s) for s in range(5)], frames).passed


def test_v5_time_reflection_detected_as_transpose(cloud4):
    r = verify_symmetry(cloud4, [time_reflection(4)])
    assert not r.passed
    chron = [cx for cx in r.counterexamples if cx.get("relation") == "chron"]
    assert chron and chron[0]["transposed"] is True


def test_v6_passes():
    assert verify_axis_and_paths(101, 10, 0).passed


def test_canonical_paths_and_zigzag():
    from zeeman.neighborhoods import path_check
    for path, kind, mode, cont, zig in canonical_paths():
        r = path_check(path, kind, mode)
        assert (r.continuous, r.zigzag) == (cont, zig)
    zz = random_zigzag(0, 4, 100)
    assert len(zz.vertices) == 101
    r = path_check(zz, "zt")
    assert r.continuous and r.zigzag


def test_run_suite_small_grid_is_deterministic():
    cfg = SuiteConfig(seeds=(1,), dims=(2,), counts=(16,))
    a = [r.to_json() for r in run_suite(("V1", "V2", "V4", "V5", "V6"), cfg)]
    b = [r.to_json() for r in run_suite(("V1", "V2", "V4", "V5", "V6"), cfg)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert all(r["pass"] for r in a)


def test_run_suite_rejects_unknown_property():
    with pytest.raises(ValueError):
        run_suite(["V9"])
