"""Causal structure of Minkowski space and the Zeeman-type topologies on finite samples."""
from .minkowski import (
    EXACT,
    ConeClass,
    DimensionError,
    Event,
    NumericMode,
    PartitionFrame,
    Side,
    Transform,
    apply_transform,
    boost,
    classify_pair,
    dilatation,
    event,
    global_frame,
    identity,
    partition_side,
    quadratic_form,
    random_transform,
    rotation,
    time_reflection,
    translation,
)
from .relations import RelationKind, future_set, past_set, relates
from .neighborhoods import (
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
from .cloud import PointCloud, null_pair_count, relation_matrix, sprinkle, unit_box
from .topology import (
    Comparison,
    FiniteTopology,
    IntervalOrder,
    SetFamily,
    ball_family,
    compare_topologies,
    generate_topology,
    intersection_topology,
    interval_subbasis,
    matched_intersection_family,
    zeeman_trace_family,
)
from .verify import SuiteConfig, VerificationReport, run_suite

__version__ = "0.1.0"
