"""Sliding-cube lattice reconfiguration: planner, validator, analysis, service."""

from .analysis import (PostOrderLabels, SplitClassification, Verdict, is_articulate,
                       min_postorder_boundary, nonarticulate_modules, postorder, split_at)
from .errors import (CubeplanError, IllegalMoveError, InfeasibleError,
                     InternalAssertionError, MalformedMoveError, ParseError,
                     TraceError, TransitUnreachableError)
from .generate import GenSpec, random_connected
from .lattice import (BoundarySummary, Cell, Configuration, boundary_modules,
                      complement_components, edge_neighbors, face_neighbors,
                      is_connected, outer_boundary)
from .moves import (Move, ROTATION, SLIDE, Trace, apply_move, legal_moves,
                    reverse_trace, rotation_legal, slide_legal, validate_trace)
from .oracle import OracleResult, oracle_reachable
from .planner import (ChainSpec, boundary_transit, canonicalize, locate_and_free,
                      plan, transport_chain)
from .stats import stats_run

__all__ = [
    "BoundarySummary", "Cell", "ChainSpec", "Configuration", "CubeplanError",
    "GenSpec", "IllegalMoveError", "InfeasibleError", "InternalAssertionError",
    "MalformedMoveError", "Move", "OracleResult", "ParseError", "PostOrderLabels",
    "ROTATION", "SLIDE", "SplitClassification", "Trace", "TraceError",
    "TransitUnreachableError", "Verdict", "apply_move", "boundary_modules",
    "boundary_transit", "canonicalize", "complement_components", "edge_neighbors",
    "face_neighbors", "is_articulate", "is_connected", "legal_moves",
    "locate_and_free", "min_postorder_boundary", "nonarticulate_modules",
    "oracle_reachable", "outer_boundary", "plan", "postorder", "random_connected",
    "reverse_trace", "rotation_legal", "slide_legal", "split_at", "stats_run",
    "transport_chain", "validate_trace",
]
