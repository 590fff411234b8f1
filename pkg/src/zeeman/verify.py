"""Property suites V1-V6 over seeded clouds.

Each ``verify_*`` function checks one property on one cloud (or one set
of axes) and returns a :class:`VerificationReport`; :func:`run_suite`
sweeps the default grid of seeds, dimensions and sizes and merges the
reports per property.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .cloud import NF, NP, SP, PointCloud, null_pair_count, relation_matrix, sprinkle, unit_box
from .minkowski import (
    EXACT,
    Event,
    NumericMode,
    PartitionFrame,
    Transform,
    global_frame,
    random_transform,
    to_scalar,
)
from .neighborhoods import Axis, Polyline, TopologyKind, axis_trace, path_check
from .relations import RelationKind
from .topology import (
    Comparison,
    IntervalOrder,
    _ball_levels,
    _thresholds,
    ball_family,
    bits,
    compare_topologies,
    cone_filter_sets,
    future_past_masks,
    generate_topology,
    intersection_topology,
    interval_subbasis,
    ints_to_rows,
    matched_intersection_family,
    pointed_ball_family,
    pointed_interval_sets,
    topology_difference,
    zeeman_trace_family,
)

PROPERTIES = ("V1", "V2", "V3", "V4", "V5", "V6")
MAX_COUNTEREXAMPLES = 10

FRAME_FREE = (RelationKind.CHRON, RelationKind.CAUSAL, RelationKind.HORISMOS,
              RelationKind.HORISMOS_IRR, RelationKind.CHRON_EQ)


def _s(c) -> str:
    return str(c)


def _ev(e: Event) -> dict:
    return {"id": e.id, "coords": [_s(c) for c in e.coords]}


@dataclass
class VerificationReport:
    property_id: str
    seeds: list = field(default_factory=list)
    dims: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, detail: str, events: Sequence[Event] = (), frame=None, epsilon=None, **extra):
        if len(self.counterexamples) >= MAX_COUNTEREXAMPLES:
            self.stats["counterexamples_dropped"] = self.stats.get("counterexamples_dropped", 0) + 1
            return
        cx = {"detail": detail, "events": [_ev(e) for e in events],
              "frame": frame.to_json() if frame is not None else None,
              "epsilon_squared": _s(epsilon) if epsilon is not None else None}
        cx.update(extra)
        self.counterexamples.append(cx)

    def merge(self, other: "VerificationReport") -> None:
        for s in other.seeds:
            if s not in self.seeds:
                self.seeds.append(s)
        for d in other.dims:
            if d not in self.dims:
                self.dims.append(d)
        for cx in other.counterexamples:
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(cx)
            else:
                self.stats["counterexamples_dropped"] = self.stats.get("counterexamples_dropped", 0) + 1
        for k, v in other.stats.items():
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                self.stats.setdefault(k, v)
            elif k.startswith("min_"):
                self.stats[k] = min(self.stats.get(k, v), v)
            else:
                self.stats[k] = self.stats.get(k, 0) + v

    def to_json(self) -> dict:
        return {"property": self.property_id, "pass": self.passed,
                "counterexamples": self.counterexamples,
                "config": dict(self.config, seeds=sorted(self.seeds), dims=sorted(self.dims)),
                "stats": self.stats}


def _report(pid: str, cloud: PointCloud | None = None, **config) -> VerificationReport:
    r = VerificationReport(pid, config=config)
    if cloud is not None:
        r.seeds.append(cloud.seed)
        r.dims.append(cloud.dim)
    return r


def _eps_true(cloud: PointCloud, scaled):
    """Squared radius in cloud units, for counterexample output."""
    return Fraction(scaled) / cloud.geometry.unit2 if cloud.mode.exact else scaled / cloud.geometry.unit2


# --------------------------------------------------------------------------
# frames


def standard_frames(cloud: PointCloud, seed: int | None = None) -> list:
    """u = e1, u = e2 (u = -e1 in d = 2) and one seeded per-event random frame."""
    d = cloud.dim
    mode = cloud.mode
    e1 = global_frame([1] + [0] * (d - 2), mode)
    second = global_frame([-1], mode) if d == 2 else global_frame([0, 1] + [0] * (d - 3), mode)
    if seed is None:
        seed = cloud.seed if cloud.seed is not None else 0
    return [e1, second, random_event_frame(cloud, seed)]


def random_event_frame(cloud: PointCloud, seed: int) -> PartitionFrame:
    rng = np.random.default_rng([seed, 7919])
    per = {}
    for e in cloud.events:
        while True:
            u = [int(v) for v in rng.integers(-3, 4, size=cloud.dim - 1)]
            if any(u):
                break
        per[e.id] = tuple(to_scalar(v, cloud.mode) for v in u)
    return PartitionFrame(tuple(to_scalar(v, cloud.mode) for v in [1] + [0] * (cloud.dim - 2)),
                          per_event=per)


# --------------------------------------------------------------------------
# V1: ZT(x) | ZS(x) = Z(x)


def verify_corollary_union(cloud: PointCloud, radii=None, *, radii_sq=None,
                           mutate: str | None = None) -> VerificationReport:
    """Pointwise identity over every (centre, radius, point) triple.

    ``mutate='z-keeps-light-cone'`` drops the light-cone exclusion from Z
    and must fail whenever the cloud has a null pair.
    """
    rep = _report("V1", cloud, mutate=mutate)
    thresholds = _thresholds(cloud, radii, radii_sq)
    rank, cuts = _ball_levels(cloud, thresholds)
    n = len(cloud)
    rows = {k: ints_to_rows(cone_filter_sets(cloud, k), n)
            for k in (TopologyKind.ZT, TopologyKind.ZS, TopologyKind.Z)}
    if mutate == "z-keeps-light-cone":
        rows[TopologyKind.Z] = np.ones((n, n), dtype=bool)
    elif mutate is not None:
        raise ValueError(f"unknown mutation {mutate!r}")
    ucuts = np.array(sorted(set(cuts)), dtype=np.int64)
    ball = rank[None, :, :] < ucuts[:, None, None]
    zt = ball & rows[TopologyKind.ZT]
    zs = ball & rows[TopologyKind.ZS]
    z = ball & rows[TopologyKind.Z]
    bad = np.argwhere((zt | zs) != z)
    for c, i, j in bad[:MAX_COUNTEREXAMPLES]:
        thr = next(t for t, cut in zip(thresholds, cuts) if cut == ucuts[c])
        rep.fail(f"ZT|ZS={bool(zt[c, i, j] | zs[c, i, j])} but Z={bool(z[c, i, j])}",
                 [cloud[int(i)], cloud[int(j)]], epsilon=_eps_true(cloud, thr))
    rep.stats.update(triples=n * n * len(thresholds), failures=int(len(bad)))
    return rep


# --------------------------------------------------------------------------
# V2: symmetric space order and symmetric chron-eq <=> irreflexive horismos


def verify_order_intersection(cloud: PointCloud, frames: Iterable[PartitionFrame]) -> VerificationReport:
    rep = _report("V2", cloud)
    horismos = relation_matrix(cloud, RelationKind.HORISMOS_IRR)
    f2, p2 = future_past_masks(cloud, IntervalOrder.CHRON_EQ)
    frames = list(frames)
    for frame in frames:
        f1, p1 = future_past_masks(cloud, IntervalOrder.SPACE_ORDER, frame)
        lhs = (f1 | p1) & (f2 | p2)
        for i, j in np.argwhere(lhs != horismos)[:MAX_COUNTEREXAMPLES]:
            rep.fail(f"order intersection={bool(lhs[i, j])}, horismos={bool(horismos[i, j])}",
                     [cloud[int(i)], cloud[int(j)]], frame)
    n = len(cloud)
    pairs = n * (n - 1) // 2
    nulls = null_pair_count(cloud)
    touched = int(np.any(horismos, axis=1).sum())
    rep.stats.update(pairs=pairs * len(frames), null_pairs=nulls * len(frames),
                     min_null_pair_fraction=nulls / pairs if pairs else 1.0,
                     min_null_event_fraction=touched / n)
    return rep


# --------------------------------------------------------------------------
# V3: partition invariance


def verify_partition_invariance(cloud: PointCloud, frames: Sequence[PartitionFrame],
                                radii=None, *, radii_sq=None) -> VerificationReport:
    """Interval topologies and matched ZT traces agree for every pair of frames.

    Also checks the closed form (X - S+(x)) & (X - S-(x)) = T(x) | {x}.
    """
    rep = _report("V3", cloud)
    time_cone = cone_filter_sets(cloud, TopologyKind.ZT)
    zt_topology = generate_topology(zeeman_trace_family(cloud, TopologyKind.ZT, radii, radii_sq=radii_sq))
    topologies = []
    for frame in frames:
        pointed = pointed_interval_sets(cloud, IntervalOrder.SPACE_ORDER, frame)
        for i, (a, b) in enumerate(zip(pointed, time_cone)):
            if a != b:
                rep.fail("closed form (X-S+(x))&(X-S-(x)) differs from T(x)|{x}",
                         [cloud[i]] + [cloud[j] for j in bits(a ^ b)], frame)
        topologies.append(generate_topology(interval_subbasis(cloud, IntervalOrder.SPACE_ORDER, frame)))
        traces = generate_topology(matched_intersection_family(
            cloud, IntervalOrder.SPACE_ORDER, frame, radii, radii_sq=radii_sq))
        if compare_topologies(traces, zt_topology) is not Comparison.EQUAL:
            rep.fail("matched ZT intersection traces differ from the ZT trace topology", (), frame)
    for a in range(len(frames)):
        for b in range(a + 1, len(frames)):
            cmp = compare_topologies(topologies[a], topologies[b])
            if cmp is not Comparison.EQUAL:
                for p, x, y in topology_difference(topologies[a], topologies[b])[:2]:
                    rep.fail(f"interval topologies of two frames compare {cmp.value} at event {p}",
                             [cloud[p]], frames[a], frame_b=frames[b].to_json(),
                             min_open_a=bits(x), min_open_b=bits(y))
    rep.stats.update(frame_pairs=len(frames) * (len(frames) - 1) // 2)
    return rep


# --------------------------------------------------------------------------
# V4: ZT and ZS as intersection topologies


def probe_radii_sq(cloud: PointCloud, quantiles: int = 8, null_probes: int = 8) -> list:
    """Single radii (squared, cloud units) at which the basic sets are compared.

    Quantiles of the pairwise distances, plus for some null pairs the
    smallest radius that puts the null partner inside the ball.
    """
    geom = cloud.geometry
    d2 = geom.distinct_d2
    if not d2:
        return []
    picks = {d2[min(len(d2) - 1, (len(d2) * k) // quantiles)] for k in range(1, quantiles + 1)}
    picks.add(2 * d2[-1])
    cls = geom.cls
    nulls = np.argwhere(np.triu((cls == NF) | (cls == NP), 1))
    for i, j in nulls[:null_probes]:
        k = d2.index(geom.d2[i, j])
        picks.add(d2[k + 1] if k + 1 < len(d2) else 2 * d2[-1])
    return [Fraction(p) / geom.unit2 if cloud.mode.exact else p / geom.unit2 for p in sorted(picks)]


THEOREMS = (("ZT", IntervalOrder.SPACE_ORDER, TopologyKind.ZT),
            ("ZS", IntervalOrder.CHRON_EQ, TopologyKind.ZS))


def verify_intersection_theorems(cloud: PointCloud, frames: Sequence[PartitionFrame],
                                 radii=None, *, radii_sq=None, probes=None,
                                 mutate: str | None = None,
                                 diagnostics: bool = False) -> VerificationReport:
    """Finite-sample check that ZT and ZS are the interval topologies cut by balls.

    Two comparisons per theorem:

    * the full intersection topology of the interval subbasis and the ball
      family against the Zeeman trace topology, both over the same radius
      set (default: every pairwise distance);
    * at every radius set in ``[radii] + [[r] for r in probes]``, the
      interval basic set at each centre cut by the balls at that same
      centre, against the Zeeman traces at the same radii.

    ``mutate='eq1-drop-null'`` / ``'eq2-drop-null'`` removes the light
    cone from S+/S- or C+/C-.  With ``diagnostics`` the join of the full
    interval subbasis with the balls of a single probe radius is also
    computed; it is typically strictly finer than the Zeeman traces and is
    only counted in the stats, never failed.
    """
    if mutate not in (None, "eq1-drop-null", "eq2-drop-null"):
        raise ValueError(f"unknown mutation {mutate!r}")
    rep = _report("V4", cloud, mutate=mutate)
    if probes is None:
        probes = probe_radii_sq(cloud)
    radius_sets = [("default" if radii is None and radii_sq is None else "given",
                    radii, radii_sq)] + [(f"r^2={p}", None, [p]) for p in probes]
    checks = unmatched_finer = 0
    for name, order, kind in THEOREMS:
        include_null = not ((mutate == "eq1-drop-null" and name == "ZT")
                            or (mutate == "eq2-drop-null" and name == "ZS"))
        theorem_frames = frames if order is IntervalOrder.SPACE_ORDER else [None]
        for frame in theorem_frames:
            sub = interval_subbasis(cloud, order, frame, include_null)
            pointed = pointed_interval_sets(cloud, order, frame, include_null)
            filt = cone_filter_sets(cloud, kind)
            for label, r, r_sq in radius_sets:
                zeeman = generate_topology(pointed_ball_family(cloud, filt, r, r_sq))
                matched = generate_topology(pointed_ball_family(cloud, pointed, r, r_sq))
                checks += 1
                cmp = compare_topologies(matched, zeeman)
                if cmp is not Comparison.EQUAL:
                    p, x, y = topology_difference(matched, zeeman)[0]
                    rep.fail(f"{name}: matched intersection topology {cmp.value} vs Zeeman traces "
                             f"at radii {label}", [cloud[p]], frame,
                             min_open_intersection=bits(x), min_open_zeeman=bits(y))
                if label == "default" or label == "given":
                    joined = generate_topology(intersection_topology(
                        sub, ball_family(cloud, r, radii_sq=r_sq)))
                    checks += 1
                    cmp = compare_topologies(joined, zeeman)
                    if cmp is not Comparison.EQUAL:
                        p, x, y = topology_difference(joined, zeeman)[0]
                        rep.fail(f"{name}: intersection topology {cmp.value} vs Zeeman traces",
                                 [cloud[p]], frame, min_open_intersection=bits(x),
                                 min_open_zeeman=bits(y))
                elif diagnostics:
                    # diagnostic only: the join at one fixed radius, centres unmatched
                    joined = generate_topology(intersection_topology(
                        sub, ball_family(cloud, r, radii_sq=r_sq)))
                    if compare_topologies(joined, zeeman) is not Comparison.EQUAL:
                        unmatched_finer += 1
    rep.stats.update(comparisons=checks, unmatched_single_radius_differences=unmatched_finer,
                     probes=len(probes))
    return rep


# --------------------------------------------------------------------------
# V5: invariance under the symmetry group


def verify_symmetry(cloud: PointCloud, transforms: Iterable[Transform],
                    frames: Sequence[PartitionFrame] = ()) -> VerificationReport:
    """Relation and cone-class matrices are unchanged by each transform.

    Space-order matrices are compared with the frame carried along by the
    transform.  Each failure records which matrix changed and whether it
    became the transpose of the original.
    """
    rep = _report("V5", cloud)
    base_cls = cloud.geometry.cls
    base = {k: relation_matrix(cloud, k) for k in FRAME_FREE}
    base_space = [relation_matrix(cloud, RelationKind.SPACE_ORDER, f) for f in frames]
    count = 0
    for t, g in enumerate(transforms):
        count += 1
        moved = cloud.transformed(g)
        if not np.array_equal(moved.geometry.cls, base_cls):
            i, j = np.argwhere(moved.geometry.cls != base_cls)[0]
            rep.fail("cone-class matrix changed", [cloud[int(i)], cloud[int(j)]], transform=t)
        for k, m in base.items():
            mm = relation_matrix(moved, k)
            if not np.array_equal(mm, m):
                i, j = np.argwhere(mm != m)[0]
                rep.fail(f"{k.value} matrix changed", [cloud[int(i)], cloud[int(j)]], transform=t,
                         relation=k.value, transposed=bool(np.array_equal(mm, m.T)))
        for f, m in zip(frames, base_space):
            mm = relation_matrix(moved, RelationKind.SPACE_ORDER, f.transported(g))
            if not np.array_equal(mm, m):
                i, j = np.argwhere(mm != m)[0]
                rep.fail("space-order matrix changed under transported frame",
                         [cloud[int(i)], cloud[int(j)]], f, transform=t)
    rep.stats.update(transforms=count)
    return rep


# --------------------------------------------------------------------------
# V6: axis traces and paths


def _rand_q(rng, lo=-4, hi=5, den=6) -> Fraction:
    return Fraction(int(rng.integers(lo, hi)), int(rng.integers(1, den)))


def random_direction(rng, dim: int, kind: str) -> tuple:
    """Rational direction of the given causal type ('time', 'space' or 'null')."""
    while True:
        s = [_rand_q(rng) for _ in range(dim - 1)]
        if any(s):
            break
    sign = 1 if rng.random() < 0.5 else -1
    if kind == "time":
        t = sign * (sum(abs(c) for c in s) + Fraction(int(rng.integers(1, 4)), 3))
    elif kind == "space":
        t = max(abs(c) for c in s) * Fraction(int(rng.integers(-9, 10)), 10)
    elif kind == "null":
        from .cloud import _random_unit_spatial
        scale = Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 5)))
        n = _random_unit_spatial(rng, dim - 1)
        return tuple([sign * scale] + [scale * c for c in n])
    else:
        raise ValueError(kind)
    return tuple([t] + s)


AXIS_CASES = (
    (TopologyKind.ZT, "space", "singleton"),
    (TopologyKind.ZT, "time", "interval"),
    (TopologyKind.ZS, "time", "singleton"),
    (TopologyKind.ZS, "space", "interval"),
    (TopologyKind.Z, "null", "singleton"),
    (TopologyKind.Z, "time", "interval"),
    (TopologyKind.Z, "space", "interval"),
)


def canonical_paths() -> list:
    """(polyline, kind, mode, expected continuous, expected zigzag)."""
    fl = NumericMode.approx(1e-9)
    from .minkowski import event
    return [
        (Polyline((event([0, 0, 0, 0], fl), event([1, 0, 0, 0], fl), event([0, 0.5, 0, 0], fl))),
         TopologyKind.ZT, fl, True, True),
        (Polyline((event([0, 0, 0, 0]), event([1, 1, 0, 0]))), TopologyKind.ZT, EXACT, False, False),
        (Polyline((event([0, 0, 0, 0]), event([1, 1, 0, 0]))), TopologyKind.Z, EXACT, False, False),
        (Polyline((event([0, 0, 0, 0]), event([0, 1, 0, 0]), event([0, 2, 1, 0]))),
         TopologyKind.ZS, EXACT, True, False),
    ]


def random_zigzag(seed: int, dim: int = 4, segments: int = 100) -> Polyline:
    """Timelike polyline whose segments alternate between future and past."""
    rng = np.random.default_rng([seed, 31337])
    pts = [Event(tuple(Fraction(0) for _ in range(dim)))]
    for k in range(segments):
        d = list(random_direction(rng, dim, "time"))
        if (d[0] > 0) != (k % 2 == 0):
            d = [-c for c in d]
        pts.append(Event(tuple(a + b for a, b in zip(pts[-1].coords, d))))
    return Polyline(tuple(pts))


def verify_axis_and_paths(samples: int = 101, n_axes: int = 10, seed: int = 0,
                          dims: Sequence[int] = (2, 4)) -> VerificationReport:
    rep = _report("V6", None, samples=samples, axes_per_case=n_axes)
    rep.seeds.append(seed)
    rng = np.random.default_rng([seed, 101])
    traces = 0
    for dim in dims:
        rep.dims.append(dim)
        for kind, axis_kind, expect in AXIS_CASES:
            for _ in range(n_axes):
                center = Event(tuple(_rand_q(rng) for _ in range(dim)))
                axis = Axis(axis_kind, random_direction(rng, dim, axis_kind))
                eps = Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 10)))
                tr = axis_trace(kind, center, eps, axis, samples)
                traces += 1
                ok = tr.trace_is_singleton if expect == "singleton" else tr.trace_is_euclidean_interval
                if not ok:
                    rep.fail(f"{kind.value} on a {axis_kind} axis is not a {expect}", [center],
                             epsilon=eps * eps, axis=[_s(c) for c in axis.direction])
    for path, kind, mode, cont, zig in canonical_paths():
        r = path_check(path, kind, mode)
        if (r.continuous, r.zigzag) != (cont, zig):
            rep.fail(f"path check for {kind.value} gave continuous={r.continuous}, "
                     f"zigzag={r.zigzag}", path.vertices)
    for dim in dims:
        zz = random_zigzag(seed, dim)
        r = path_check(zz, TopologyKind.ZT)
        if not (r.continuous and r.zigzag):
            rep.fail("random timelike zigzag is not ZT-continuous with zigzag", zz.vertices[:3])
    rep.stats.update(axis_traces=traces)
    return rep


# --------------------------------------------------------------------------
# the suite


@dataclass(frozen=True)
class SuiteConfig:
    seeds: tuple = tuple(range(10))
    dims: tuple = (2, 4)
    counts: tuple = (16, 64)
    mode: NumericMode = EXACT
    null_pair_fraction: float = 0.25
    transforms: int = 20
    symmetry_counts: tuple | None = None   # None means every size in counts
    samples: int = 101
    axes: int = 10

    def to_json(self) -> dict:
        return {"seeds": list(self.seeds), "dims": list(self.dims), "counts": list(self.counts),
                "mode": self.mode.kind, "null_tolerance": self.mode.null_tolerance,
                "null_pair_fraction": self.null_pair_fraction, "transforms": self.transforms,
                "symmetry_counts": list(self.counts if self.symmetry_counts is None else self.symmetry_counts), "samples": self.samples,
                "axes": self.axes}


def suite_clouds(cfg: SuiteConfig):
    for seed in cfg.seeds:
        for dim in cfg.dims:
            for count in cfg.counts:
                yield sprinkle(unit_box(dim), count, seed, cfg.mode, cfg.null_pair_fraction)


def run_suite(properties: Iterable[str] = PROPERTIES, cfg: SuiteConfig = SuiteConfig()) -> list:
    """Run the named properties over the configured grid; one merged report each."""
    properties = sorted(set(properties))
    for p in properties:
        if p not in PROPERTIES:
            raise ValueError(f"unknown property {p!r}")
    merged = {p: VerificationReport(p, config=cfg.to_json()) for p in properties}
    needs_clouds = set(properties) & {"V1", "V2", "V3", "V4", "V5"}
    if needs_clouds:
        for cloud in suite_clouds(cfg):
            frames = standard_frames(cloud)
            if "V1" in merged:
                merged["V1"].merge(verify_corollary_union(cloud))
            if "V2" in merged:
                merged["V2"].merge(verify_order_intersection(cloud, frames))
            if "V3" in merged:
                merged["V3"].merge(verify_partition_invariance(cloud, frames))
            if "V4" in merged:
                merged["V4"].merge(verify_intersection_theorems(cloud, frames))
            if "V5" in merged and len(cloud) in (cfg.symmetry_counts or cfg.counts):
                gs = [random_transform(1000 * cloud.seed + k, cfg.mode, cloud.dim)
                      for k in range(cfg.transforms)]
                merged["V5"].merge(verify_symmetry(cloud, gs, frames))
    if "V6" in merged:
        for seed in cfg.seeds[:1]:
            merged["V6"].merge(verify_axis_and_paths(cfg.samples, cfg.axes, seed, cfg.dims))
    return [merged[p] for p in properties]
