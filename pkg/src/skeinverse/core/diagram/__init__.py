"""Diagram layer: codes, surgery, traversal and Reidemeister moves."""

from .crossing import Crossing, Smoothing
from .diagram import (
    ComponentTable,
    LinkDiagram,
    braid_closure,
    canonical_code,
    disjoint_union,
    faces,
    mirror,
    parse_diagram,
    smooth,
    state_loop_count,
    switch,
    trace_components,
    unlink,
)
from .moves import MoveKind, MoveSpec, apply_move, available_moves, random_diagram
from .traversal import CrossingRecord, CrossingReport, Locality, Status, TraversalContext, classify
from .census import CensusEntry, load_census

__all__ = [
    "Crossing", "Smoothing", "ComponentTable", "LinkDiagram", "braid_closure", "canonical_code",
    "disjoint_union", "faces", "mirror", "parse_diagram", "smooth", "state_loop_count", "switch", "trace_components",
    "unlink", "MoveKind", "MoveSpec", "apply_move", "available_moves", "random_diagram",
    "CrossingRecord", "CrossingReport", "Locality", "Status", "TraversalContext", "classify",
    "CensusEntry", "load_census",
]
