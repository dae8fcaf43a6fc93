"""
Color, size, and serialisation rules
====================================

Paper-nodes are colored by cardinality (how many co-authors) and sized by
multiplicity (how many papers the bundle holds, area-proportional).  Links
inherit their paper-node's color, so the palette carries meaning out to
the edges; all author-nodes share one purple.
"""

from pathlib import Path

from hyperlay import (
    LayoutConfig,
    StyleSpec,
    assign_styles,
    bundle,
    parse_hypergraph,
    render_svg,
)
from hyperlay.layout import run_layout

spec = StyleSpec()
print("cardinality palette:")
for cardinality in range(1, 7):
    note = "" if cardinality <= 4 else "  (cyclic extension)"
    print(f"  {cardinality} co-authors -> {spec.paper_color(cardinality)}{note}")

print("\nmultiplicity sizing (radius = base * sqrt(multiplicity)):")
for multiplicity in (1, 2, 4, 9):
    print(f"  x{multiplicity}: radius {spec.paper_radius(multiplicity):.2f}")

# A small network exercising every cardinality 1-4 and a fat bundle.
network = b"""
solo
pair1 pair2
trio1 trio2 trio3
quad1 quad2 quad3 quad4
pair1 pair2
pair1 pair2
pair1 pair2
solo trio1
"""
h = parse_hypergraph(network, "edgelist")
g = bundle(h)
cfg = LayoutConfig(seed=11)
state = run_layout(g, cfg)
styled = assign_styles(g, state, spec)

print("\nstyled paper-nodes:")
for node in styled.nodes:
    if node.kind == "paper":
        print(f"  {node.id}: cardinality {node.cardinality} -> {node.color}, "
              f"multiplicity {node.multiplicity} -> r={node.radius:.2f}")

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)
path = out_dir / "styling.svg"
path.write_bytes(render_svg(styled, cfg.canvas_width, cfg.canvas_height, labels=True))
print(f"\nwrote {path} (with labels)")
