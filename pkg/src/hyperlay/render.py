"""Visual encoding and output: cardinality colors, multiplicity sizing,
SVG emission, and a JSON layout dump.

Paper-nodes are colored by cardinality (co-author count) and sized by
multiplicity (bundled hyperedge count, area-proportional via a sqrt radius
rule).  Every link inherits its paper-node's fill; all author-nodes share
one color.  Both output writers are byte-deterministic.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from xml.sax.saxutils import escape

from .geometry import CrossingReport
from .layout import LayoutConfig, LayoutState
from .model import BundledGraph

DUMP_SCHEMA_VERSION = 1

CARDINALITY_PALETTE = {1: "#1f4e9c", 2: "#1a7a3a", 3: "#7fd24a", 4: "#f2d21f"}
# cardinalities of 5 and above cycle through this, in order
EXTENSION_PALETTE = ("#1fbfd2", "#d21f6e", "#d2881f", "#6ed21f")
AUTHOR_COLOR = "#6a2d8f"


class StyleError(ValueError):
    """No color rule covers a cardinality present in the graph."""


@dataclass(frozen=True)
class StyleSpec:
    cardinality_palette: dict[int, str] = field(
        default_factory=lambda: dict(CARDINALITY_PALETTE)
    )
    extension_palette: tuple[str, ...] = EXTENSION_PALETTE
    author_color: str = AUTHOR_COLOR
    base_paper_radius: float = 6.0
    author_radius_factor: float = 0.7

    def paper_color(self, cardinality: int) -> str:
        if cardinality in self.cardinality_palette:
            return self.cardinality_palette[cardinality]
        if cardinality >= 5 and self.extension_palette:
            return self.extension_palette[(cardinality - 5) % len(self.extension_palette)]
        raise StyleError(f"no color configured for cardinality {cardinality}")

    def paper_radius(self, multiplicity: int) -> float:
        # area proportional to the number of bundled hyperedges
        return self.base_paper_radius * math.sqrt(multiplicity)

    @property
    def author_radius(self) -> float:
        return self.base_paper_radius * self.author_radius_factor


@dataclass(frozen=True)
class StyledNode:
    id: str
    kind: str  # "paper" | "author" | "pendant-author"
    x: float
    y: float
    radius: float
    color: str
    label: str | None = None
    cardinality: int | None = None
    multiplicity: int | None = None


@dataclass(frozen=True)
class StyledLink:
    author: int
    paper: int
    x1: float
    y1: float
    x2: float
    y2: float
    color: str


@dataclass(frozen=True)
class StyledLayout:
    """Draw-ready layout: nodes in draw order (papers first, then authors)."""

    nodes: tuple[StyledNode, ...]
    links: tuple[StyledLink, ...]


def assign_styles(g: BundledGraph, s: LayoutState, spec: StyleSpec | None = None) -> StyledLayout:
    """Resolve colors and radii for a completed layout (pendants placed)."""
    spec = spec or StyleSpec()
    nodes: list[StyledNode] = []
    paper_fill: dict[int, str] = {}
    for paper in g.paper_nodes:
        x, y = s.paper_position(paper.index)
        color = spec.paper_color(paper.cardinality)
        paper_fill[paper.index] = color
        nodes.append(
            StyledNode(
                id=f"p{paper.index}",
                kind="paper",
                x=float(x),
                y=float(y),
                radius=spec.paper_radius(paper.multiplicity),
                color=color,
                label=" / ".join(paper.labels) if paper.labels else None,
                cardinality=paper.cardinality,
                multiplicity=paper.multiplicity,
            )
        )
    for author in g.author_nodes:
        x, y = s.author_position(author.index)
        nodes.append(
            StyledNode(
                id=author.identifier,
                kind="pendant-author" if author.pendant else "author",
                x=float(x),
                y=float(y),
                radius=spec.author_radius,
                color=spec.author_color,
                label=author.identifier,
            )
        )
    links = []
    for author, paper in g.links:
        ax, ay = s.author_position(author)
        px, py = s.paper_position(paper)
        links.append(
            StyledLink(
                author=author,
                paper=paper,
                x1=float(ax),
                y1=float(ay),
                x2=float(px),
                y2=float(py),
                color=paper_fill[paper],
            )
        )
    return StyledLayout(tuple(nodes), tuple(links))


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def render_svg(sl: StyledLayout, width: float, height: float, labels: bool = False) -> bytes:
    """Serialise a styled layout as SVG 1.1 bytes.

    One line per link, one circle per node, optional text labels; element
    order follows the draw order (links, then paper-nodes, then
    author-nodes) and coordinates use fixed 3-decimal formatting so output
    is byte-deterministic.
    """
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:g}" height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="#ffffff"/>',
    ]
    for link in sl.links:
        parts.append(
            f'<line x1="{_fmt(link.x1)}" y1="{_fmt(link.y1)}" '
            f'x2="{_fmt(link.x2)}" y2="{_fmt(link.y2)}" '
            f'stroke="{link.color}" stroke-width="1.5"/>'
        )
    for node in sl.nodes:
        parts.append(
            f'<circle cx="{_fmt(node.x)}" cy="{_fmt(node.y)}" '
            f'r="{_fmt(node.radius)}" fill="{node.color}"/>'
        )
    if labels:
        for node in sl.nodes:
            if node.label is None:
                continue
            parts.append(
                f'<text x="{_fmt(node.x)}" y="{_fmt(node.y - node.radius - 3.0)}" '
                f'font-size="10" text-anchor="middle" fill="#222222">'
                f"{escape(node.label)}</text>"
            )
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def dump_layout(
    sl: StyledLayout,
    report: CrossingReport,
    config: LayoutConfig,
    energy_history=(),
    metrics: dict | None = None,
) -> bytes:
    """Serialise the styled layout plus run statistics as deterministic JSON.

    Keys are sorted and numbers keep full float precision, so re-parsing
    reproduces the layout exactly and equal runs dump equal bytes.
    """
    document = {
        "schema": DUMP_SCHEMA_VERSION,
        "seed": config.seed,
        "config": asdict(config),
        "nodes": [asdict(node) for node in sl.nodes],
        "links": [asdict(link) for link in sl.links],
        "crossings": {
            "total": report.total,
            "per_paper": {str(k): report.per_paper[k] for k in sorted(report.per_paper)},
        },
        "energy_history": list(energy_history),
        "metrics": dict(metrics or {}),
    }
    return (json.dumps(document, sort_keys=True, indent=2) + "\n").encode("utf-8")
