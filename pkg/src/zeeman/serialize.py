"""JSON and CSV formats.

Exact scalars are written as "p/q" strings so output is bit-identical
across platforms; float scalars are plain JSON numbers.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cloud import PointCloud
from .minkowski import EXACT, Event, NumericMode, to_scalar
from .neighborhoods import Polyline
from .topology import FiniteTopology, SetFamily, bits, from_indices


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def scalar_to_json(c):
    if isinstance(c, Fraction):
        return str(c)
    if isinstance(c, int):
        return str(c)
    return float(c)


def mode_to_json(mode: NumericMode) -> dict:
    out = {"mode": mode.kind}
    if not mode.exact:
        out["null_tolerance"] = mode.null_tolerance
    return out


def mode_from_json(obj: dict) -> NumericMode:
    kind = obj.get("mode", "exact")
    if kind == "exact":
        return EXACT
    if kind == "float":
        return NumericMode.approx(obj.get("null_tolerance", 1e-9))
    raise ValueError(f"unknown mode {kind!r}")


def event_to_json(e: Event) -> dict:
    return {"id": e.id, "coords": [scalar_to_json(c) for c in e.coords]}


def event_from_json(obj, mode: NumericMode = EXACT) -> Event:
    if isinstance(obj, dict):
        coords, eid = obj["coords"], obj.get("id")
    else:
        coords, eid = obj, None
    if not isinstance(coords, list):
        raise ValueError("event coords must be a list")
    return Event(tuple(to_scalar(c, mode) for c in coords), eid)


def cloud_to_json(cloud: PointCloud) -> dict:
    out = mode_to_json(cloud.mode)
    out.update(seed=cloud.seed, events=[event_to_json(e) for e in cloud.events])
    if cloud.box is not None:
        out["box"] = [[scalar_to_json(lo), scalar_to_json(hi)] for lo, hi in cloud.box]
    return out


def cloud_from_json(obj: dict) -> PointCloud:
    mode = mode_from_json(obj)
    events = tuple(event_from_json(e, mode) for e in obj["events"])
    box = obj.get("box")
    if box is not None:
        box = tuple((to_scalar(lo, mode), to_scalar(hi, mode)) for lo, hi in box)
    return PointCloud(events, mode, box, obj.get("seed"))


def polyline_from_json(obj: dict) -> tuple:
    mode = mode_from_json(obj)
    return Polyline(tuple(event_from_json(v, mode) for v in obj["vertices"])), mode


def polyline_to_json(p: Polyline, mode: NumericMode = EXACT) -> dict:
    out = mode_to_json(mode)
    out["vertices"] = [[scalar_to_json(c) for c in v.coords] for v in p.vertices]
    return out


def family_to_json(f: SetFamily) -> dict:
    return {"universe_size": f.universe_size, "members": f.to_lists()}


def family_from_json(obj: dict) -> SetFamily:
    return SetFamily.from_lists(int(obj["universe_size"]), obj["members"])


def topology_to_json(t: FiniteTopology) -> dict:
    return {"universe_size": t.universe_size, "min_open": [bits(m) for m in t.min_open]}


def topology_from_json(obj: dict) -> FiniteTopology:
    return FiniteTopology(int(obj["universe_size"]), tuple(from_indices(s) for s in obj["min_open"]))


def matrix_to_csv(m) -> str:
    return "".join(",".join("1" if v else "0" for v in row) + "\n" for row in m)
