"""Mixed-coordinate node-link layouts for co-authorship hypergraphs.

The pipeline: parse a hypergraph, bundle duplicate hyperedges into sized
paper-nodes, pin those to slots on an oval, force-relax the non-pendant
author-nodes inside it, reduce link crossings by swapping paper-node slots,
pin pendant author-nodes just outside the oval, and emit SVG/JSON.
"""

from .geometry import (
    CrossingReport,
    Oval,
    count_crossings,
    oval_slots,
    point_oval_class,
    segments_cross,
)
from .layout import (
    LayoutConfig,
    LayoutState,
    choose_swap_candidates,
    compute_forces,
    initial_positioning,
    mixed_discrete_continuous,
    place_pendants,
    relax,
    run_layout,
    swap_delta,
)
from .model import (
    BundledGraph,
    Hypergraph,
    HypergraphError,
    ParseError,
    UnknownAuthorError,
    ValidationError,
    bundle,
    degree_profile,
    parse_hypergraph,
)
from .render import StyledLayout, StyleSpec, assign_styles, dump_layout, render_svg

__version__ = "0.1.0"

__all__ = [
    "BundledGraph",
    "CrossingReport",
    "Hypergraph",
    "HypergraphError",
    "LayoutConfig",
    "LayoutState",
    "Oval",
    "ParseError",
    "StyleSpec",
    "StyledLayout",
    "UnknownAuthorError",
    "ValidationError",
    "assign_styles",
    "bundle",
    "choose_swap_candidates",
    "compute_forces",
    "count_crossings",
    "degree_profile",
    "dump_layout",
    "initial_positioning",
    "mixed_discrete_continuous",
    "oval_slots",
    "parse_hypergraph",
    "place_pendants",
    "point_oval_class",
    "relax",
    "render_svg",
    "run_layout",
    "segments_cross",
    "swap_delta",
]
