"""hyperlay command line: parse a hypergraph, lay it out, write SVG and JSON.

Exit codes: 0 success, 1 for input/validation/IO errors, 2 for usage
errors.  Output files are written via temp-file-plus-rename so a failing
run never leaves partial output behind.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
import time
from pathlib import Path

from .geometry import Oval
from .layout import LayoutConfig, default_outer_oval, run_layout
from .model import HypergraphError, bundle, parse_hypergraph
from .render import assign_styles, dump_layout, render_svg

SEED_ENV_VAR = "HYPERLAY_SEED"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperlay",
        description="Lay out a co-authorship hypergraph as a mixed-coordinate "
        "node-link diagram and write it as SVG.",
    )
    parser.add_argument("-i", "--input", required=True, metavar="PATH",
                        help="input file, or - for stdin")
    parser.add_argument("--format", choices=("json", "edgelist"), default="json",
                        help="input format (default: json)")
    parser.add_argument("-o", "--output", required=True, metavar="PATH",
                        help="SVG output path")
    parser.add_argument("--dump", metavar="PATH",
                        help="also write a JSON layout dump")
    parser.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (fallback: ${SEED_ENV_VAR}, then 0)")
    parser.add_argument("--width", type=float, default=1000.0,
                        help="canvas width (default: 1000)")
    parser.add_argument("--height", type=float, default=700.0,
                        help="canvas height (default: 700)")
    parser.add_argument("--oval-aspect", type=float, default=None, metavar="R",
                        help="outer oval vertical/horizontal semi-axis ratio "
                        "(default: derived from the canvas)")
    parser.add_argument("--iterations", type=int, default=500, metavar="N",
                        help="continuous-phase iteration cap (default: 500)")
    parser.add_argument("--mdc-rounds", type=int, default=50, metavar="N",
                        help="discrete optimisation rounds (default: 50)")
    parser.add_argument("--swap-attempts", type=int, default=100, metavar="N",
                        help="swap candidates tried per round (default: 100)")
    parser.add_argument("--post-swap-iters", type=int, default=50, metavar="N",
                        help="force iterations after an accepted swap (default: 50)")
    parser.add_argument("--threshold", type=float, default=1e-3, metavar="F",
                        help="relative energy decrease treated as converged "
                        "(default: 1e-3)")
    parser.add_argument("--labels", action="store_true",
                        help="draw node labels in the SVG")
    parser.add_argument("--metrics", action="store_true",
                        help="print bundling and crossing statistics")
    return parser


def _resolve_seed(args: argparse.Namespace) -> int:
    if args.seed is not None:
        return args.seed
    from_env = os.environ.get(SEED_ENV_VAR)
    if from_env is not None:
        try:
            return int(from_env)
        except ValueError:
            raise ValueError(f"${SEED_ENV_VAR} must be an integer, got {from_env!r}")
    return 0


def _config_from_args(args: argparse.Namespace, seed: int) -> LayoutConfig:
    outer = default_outer_oval(args.width, args.height)
    if args.oval_aspect is not None:
        semi_x = 0.42 * args.width
        outer = Oval(outer.center, semi_x, semi_x * args.oval_aspect)
    return LayoutConfig(
        canvas_width=args.width,
        canvas_height=args.height,
        outer_oval=outer,
        energy_threshold=args.threshold,
        max_iterations=args.iterations,
        discrete_rounds=args.mdc_rounds,
        swap_attempts=args.swap_attempts,
        post_swap_iterations=args.post_swap_iters,
        seed=seed,
    )


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _atomic_write_all(targets: list[tuple[Path, bytes]]) -> None:
    # stage every file first, then rename, so failures leave nothing behind
    staged: list[tuple[str, Path]] = []
    try:
        for path, data in targets:
            directory = path.parent if str(path.parent) else Path(".")
            fd, temp_name = tempfile.mkstemp(dir=str(directory), prefix=f".{path.name}.")
            with os.fdopen(fd, "wb") as handle:
                handle.write(data)
            staged.append((temp_name, path))
        while staged:
            temp_name, path = staged[0]
            os.replace(temp_name, path)
            staged.pop(0)
    except OSError:
        for temp_name, _ in staged:
            try:
                os.unlink(temp_name)
            except OSError:
                pass
        raise


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        seed = _resolve_seed(args)
        config = _config_from_args(args, seed)
    except ValueError as exc:
        print(f"hyperlay: usage error: {exc}", file=sys.stderr)
        return 2

    try:
        data = _read_input(args.input)
    except OSError as exc:
        print(f"hyperlay: cannot read input: {exc}", file=sys.stderr)
        return 1

    try:
        hypergraph = parse_hypergraph(data, args.format)
    except HypergraphError as exc:
        print(f"hyperlay: invalid input: {exc}", file=sys.stderr)
        return 1

    graph = bundle(hypergraph)
    if graph.n_papers == 0:
        print("hyperlay: input contains no hyperedges", file=sys.stderr)
        return 1

    started = time.perf_counter()
    try:
        state = run_layout(graph, config)
        styled = assign_styles(graph, state)
    except ValueError as exc:
        print(f"hyperlay: {exc}", file=sys.stderr)
        return 1
    wall_time = time.perf_counter() - started

    svg = render_svg(styled, config.canvas_width, config.canvas_height, labels=args.labels)
    metrics = {
        "authors": graph.n_authors,
        "papers_before_bundling": len(hypergraph.hyperedges),
        "papers_after_bundling": graph.n_papers,
        "nodes_before_bundling": graph.n_authors + len(hypergraph.hyperedges),
        "nodes_after_bundling": graph.total_nodes,
        "crossings_after_relax": state.pre_discrete_crossings,
        "crossings_final": state.crossing_report.total,
    }

    targets = [(Path(args.output), svg)]
    if args.dump:
        dump = dump_layout(styled, state.crossing_report, config, state.energy_history, metrics)
        targets.append((Path(args.dump), dump))
    try:
        _atomic_write_all(targets)
    except OSError as exc:
        print(f"hyperlay: cannot write output: {exc}", file=sys.stderr)
        return 1

    if args.metrics:
        print(f"authors: {metrics['authors']}")
        print(f"papers: {metrics['papers_before_bundling']} -> {metrics['papers_after_bundling']}")
        print(f"nodes: {metrics['nodes_before_bundling']} -> {metrics['nodes_after_bundling']}")
        print(f"crossings: {metrics['crossings_after_relax']} -> {metrics['crossings_final']}")
        print(f"wall_time_s: {wall_time:.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
