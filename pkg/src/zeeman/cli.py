"""Command line front end.

Exit codes: 0 success or pass, 1 a verified property failed, 2 bad usage
or bad input.  Output is JSON with sorted keys (CSV for ``matrix``).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import serialize as ser
from .cloud import relation_matrix, sprinkle, unit_box
from .minkowski import EXACT, NumericMode, classify_pair, global_frame, to_scalar, Event
from .neighborhoods import Axis, TopologyKind, axis_trace, nbhd_contains, path_check
from .relations import RelationKind, relates
from .topology import (
    IntervalOrder,
    ball_family,
    compare_topologies,
    generate_topology,
    intersection_topology,
    interval_subbasis,
    zeeman_trace_family,
)
from .verify import PROPERTIES, SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _mode(args) -> NumericMode:
    if args.mode == "float":
        return NumericMode.approx(args.tol)
    return EXACT


def _vector(text: str, mode: NumericMode, dim: int | None = None, what: str = "vector") -> tuple:
    try:
        v = tuple(to_scalar(c.strip(), mode) for c in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad {what} {text!r}: {exc}") from None
    if dim is not None and len(v) != dim:
        raise UsageError(f"{what} {text!r} has {len(v)} components, expected {dim}")
    return v


def _event(args, name: str) -> Event:
    return Event(_vector(getattr(args, name), _mode(args), args.dim, f"--{name}"))


def _frame(args, dim: int):
    if args.frame is None:
        return global_frame([1] + [0] * (dim - 2), _mode(args))
    u = _vector(args.frame, _mode(args), None, "--frame")
    if len(u) == dim and u[0] == 0:
        u = u[1:]   # a full 4-vector with zero time part is accepted too
    if len(u) != dim - 1:
        raise UsageError(f"--frame needs {dim - 1} spatial components, got {len(u)}")
    return global_frame(u, _mode(args))


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def _epsilon(args):
    eps = to_scalar(args.epsilon, _mode(args))
    if not eps > 0:
        raise UsageError(f"epsilon must be positive, got {args.epsilon}")
    return eps


def _radii(args, mode):
    if args.radii in (None, "auto"):
        return None
    radii = _vector(args.radii, mode, None, "--radii")
    if any(not r > 0 for r in radii):
        raise UsageError("radii must be positive")
    return radii


def cmd_classify(args):
    return {"class": classify_pair(_event(args, "x"), _event(args, "y"), _mode(args)).value}


def cmd_relate(args):
    kind = RelationKind(args.relation)
    x, y = _event(args, "x"), _event(args, "y")
    frame = _frame(args, x.dim) if kind.needs_frame else None
    return {"relation": kind.value, "holds": relates(kind, x, y, frame, _mode(args))}


def cmd_nbhd(args):
    c, y = _event(args, "center"), _event(args, "y")
    return {"topology": args.topology,
            "contains": nbhd_contains(args.topology, c, _epsilon(args), y, _mode(args))}


def cmd_axis_trace(args):
    c = _event(args, "center")
    axis = Axis(args.axis, _vector(args.direction, _mode(args), args.dim, "--direction"))
    tr = axis_trace(args.topology, c, _epsilon(args), axis, args.samples, _mode(args))
    return {"trace_is_singleton": tr.trace_is_singleton,
            "trace_is_euclidean_interval": tr.trace_is_euclidean_interval,
            "members": [int(m) for m in tr.members]}


def cmd_path_check(args):
    path, mode = ser.polyline_from_json(_read_json(args.inputs[0]))
    r = path_check(path, args.topology, mode)
    return {"continuous": r.continuous, "zigzag": r.zigzag,
            "segment_classes": [c.value for c in r.segment_classes]}


def cmd_sprinkle(args):
    mode = _mode(args)
    cloud = sprinkle(unit_box(args.dim or 4), args.count, args.seed, mode, args.null_fraction)
    return ser.cloud_to_json(cloud)


def _cloud(args):
    if not args.inputs:
        raise UsageError("--in CLOUD.json is required")
    cloud = ser.cloud_from_json(_read_json(args.inputs[0]))
    if args.dim is not None and cloud.dim != args.dim:
        raise UsageError(f"cloud has dimension {cloud.dim}, --dim says {args.dim}")
    return cloud


def cmd_matrix(args):
    cloud = _cloud(args)
    kind = RelationKind(args.relation)
    frame = _frame(args, cloud.dim) if kind.needs_frame else None
    return ser.matrix_to_csv(relation_matrix(cloud, kind, frame))


def cmd_subbasis(args):
    cloud = _cloud(args)
    order = IntervalOrder(args.order)
    frame = _frame(args, cloud.dim) if order is IntervalOrder.SPACE_ORDER else None
    return ser.family_to_json(interval_subbasis(cloud, order, frame))


def cmd_family(args):
    cloud = _cloud(args)
    radii = _radii(args, cloud.mode)
    if args.type == "ball":
        return ser.family_to_json(ball_family(cloud, radii))
    return ser.family_to_json(zeeman_trace_family(cloud, args.type, radii))


def _family_or_topology(obj):
    if "min_open" in obj:
        return ser.topology_from_json(obj)
    return generate_topology(ser.family_from_json(obj))


def cmd_topo_generate(args):
    return ser.topology_to_json(generate_topology(ser.family_from_json(_read_json(args.inputs[0]))))


def cmd_topo_intersect(args):
    if len(args.inputs) != 2:
        raise UsageError("topo-intersect needs two --in files")
    a, b = (ser.family_from_json(_read_json(p)) for p in args.inputs)
    return ser.family_to_json(intersection_topology(a, b))


def cmd_topo_compare(args):
    if len(args.inputs) != 2:
        raise UsageError("topo-compare needs two --in files")
    a, b = (_family_or_topology(_read_json(p)) for p in args.inputs)
    return {"comparison": compare_topologies(a, b).value}


def cmd_verify(args):
    props = PROPERTIES if args.property == "all" else tuple(p.strip() for p in args.property.split(","))
    cfg = SuiteConfig(
        seeds=(args.seed,) if args.seed is not None else SuiteConfig.seeds,
        dims=(args.dim,) if args.dim is not None else SuiteConfig.dims,
        counts=(args.count,) if args.count is not None else SuiteConfig.counts,
        mode=_mode(args),
    )
    reports = run_suite(props, cfg)
    return {"pass": all(r.passed for r in reports), "reports": [r.to_json() for r in reports]}


COMMANDS = {
    "classify": cmd_classify, "relate": cmd_relate, "nbhd": cmd_nbhd,
    "axis-trace": cmd_axis_trace, "path-check": cmd_path_check, "sprinkle": cmd_sprinkle,
    "matrix": cmd_matrix, "subbasis": cmd_subbasis, "family": cmd_family,
    "topo-generate": cmd_topo_generate, "topo-intersect": cmd_topo_intersect,
    "topo-compare": cmd_topo_compare, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, default=1e-9, help="null band (float mode)")
    common.add_argument("--seed", type=int)
    common.add_argument("--count", type=int)
    common.add_argument("--frame", help='spatial partition normal, e.g. "0,1,0"')
    common.add_argument("--epsilon", default="1")
    common.add_argument("--radii", help='"auto" or comma-separated radii')
    common.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE")
    common.add_argument("--out", metavar="FILE")

    p = argparse.ArgumentParser(prog="zeeman", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    relations = [k.value for k in RelationKind]
    topologies = [k.value for k in TopologyKind]

    s = sub.add_parser("classify", parents=[common])
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s = sub.add_parser("relate", parents=[common])
    s.add_argument("--relation", choices=relations, required=True)
    s.add_argument("--x", required=True)
    s.add_argument("--y", required=True)
    s = sub.add_parser("nbhd", parents=[common])
    s.add_argument("--topology", choices=topologies, required=True)
    s.add_argument("--center", required=True)
    s.add_argument("--y", required=True)
    s = sub.add_parser("axis-trace", parents=[common])
    s.add_argument("--topology", choices=topologies, required=True)
    s.add_argument("--center", required=True)
    s.add_argument("--axis", choices=("time", "space", "null"), required=True)
    s.add_argument("--direction", required=True)
    s.add_argument("--samples", type=int, default=101)
    s = sub.add_parser("path-check", parents=[common])
    s.add_argument("--topology", choices=topologies, required=True)
    s = sub.add_parser("sprinkle", parents=[common])
    s.add_argument("--null-fraction", type=float, default=0.25)
    s = sub.add_parser("matrix", parents=[common])
    s.add_argument("--relation", choices=relations, required=True)
    s = sub.add_parser("subbasis", parents=[common])
    s.add_argument("--order", choices=[o.value for o in IntervalOrder], required=True)
    s = sub.add_parser("family", parents=[common])
    s.add_argument("--type", choices=["ball"] + topologies[1:], required=True)
    for name in ("topo-generate", "topo-intersect", "topo-compare"):
        sub.add_parser(name, parents=[common])
    s = sub.add_parser("verify", parents=[common])
    s.add_argument("--property", default="all", help="V1..V6, comma-separated, or all")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "sprinkle":
        args.seed = 0 if args.seed is None else args.seed
        args.count = 16 if args.count is None else args.count
    try:
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError, KeyError, TypeError) as exc:
        print(f"zeeman {args.command}: {exc}", file=sys.stderr)
        return 2
    text = result if isinstance(result, str) else ser.dumps(result) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify" and not result["pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
