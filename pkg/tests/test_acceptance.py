"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Tolerances are pinned here: integer checks are exact, geometric
slot residuals use 1e-12 relative, force comparisons use 1e-9 absolute and
1e-12 relative on magnitudes.
"""

from __future__ import annotations

import math
import time

import numpy as np
import pytest

from hyperlay.cli import main as cli_main
from hyperlay.geometry import count_crossings, point_oval_class
from hyperlay.layout import (
    LayoutConfig,
    attraction_magnitude,
    compute_forces,
    current_crossings,
    ideal_edge_length,
    initial_positioning,
    relax,
    repulsion_magnitude,
    run_layout,
    swap_delta,
)
from hyperlay.model import bundle, degree_profile, parse_hypergraph
from hyperlay.render import CARDINALITY_PALETTE, assign_styles

from conftest import random_bundled, random_links, twin_hypergraph, twin_json_bytes
from reference import brute_force_report, resummed_forces


def fast_config(seed: int) -> LayoutConfig:
    return LayoutConfig(
        max_iterations=80,
        discrete_rounds=8,
        swap_attempts=25,
        post_swap_iterations=10,
        seed=seed,
    )


def seeded_runs(count: int, first_seed: int = 100):
    rng = np.random.default_rng(first_seed)
    for offset in range(count):
        g = random_bundled(rng, max_authors=14, max_edges=12)
        cfg = fast_config(seed=first_seed + offset)
        yield g, cfg, run_layout(g, cfg)


def test_acceptance_1_bundling_arithmetic():
    started = time.perf_counter()
    h = parse_hypergraph(twin_json_bytes())
    g = bundle(h)
    elapsed = time.perf_counter() - started
    assert len(h.authors) == 33
    assert len(h.hyperedges) == 48
    assert g.n_papers == 30
    assert g.total_nodes == 63
    assert elapsed < 1.0
    cardinalities, _ = degree_profile(g)
    assert set(cardinalities) <= {1, 2, 3, 4}
    print(f"\nACCEPTANCE 1 PASS: 48 hyperedges bundle to 30 paper-nodes, "
          f"81 nodes reduce to 63 ({elapsed * 1000:.1f} ms)")


def test_acceptance_2_crossing_oracle_equivalence():
    rng = np.random.default_rng(200)
    checked = 0
    for _ in range(100):
        g = random_bundled(rng, max_authors=25, max_edges=20)
        links = random_links(rng, g)
        report = count_crossings(links)
        total, per_paper = brute_force_report(links)
        assert report.total == total
        assert report.per_paper == per_paper
        checked += 1
    assert checked == 100
    print(f"\nACCEPTANCE 2 PASS: count_crossings equals the independent "
          f"all-pairs oracle on {checked} random bundled graphs (exact)")


def test_acceptance_3_swap_delta_exactness():
    rng = np.random.default_rng(300)
    checked = 0
    while checked < 100:
        g = random_bundled(rng, max_authors=20, max_edges=15)
        if g.n_papers < 2:
            continue
        cfg = fast_config(seed=int(rng.integers(100000)))
        s = initial_positioning(g, cfg)
        s.slot_of_paper = rng.permutation(g.n_papers)
        s.free_positions = rng.uniform(
            0, min(cfg.canvas_width, cfg.canvas_height), s.free_positions.shape
        )
        p1, p2 = (int(v) for v in rng.choice(g.n_papers, size=2, replace=False))
        before = current_crossings(g, s).total
        delta = swap_delta(g, s, p1, p2)
        s.slot_of_paper[[p1, p2]] = s.slot_of_paper[[p2, p1]]
        after = current_crossings(g, s).total
        assert delta == after - before
        checked += 1
    print(f"\nACCEPTANCE 3 PASS: swap_delta equals the full-recount "
          f"difference on {checked} random states (exact)")


def test_acceptance_4_crossing_monotonicity():
    runs = 0
    for g, cfg, state in seeded_runs(50, first_seed=400):
        assert state.pre_discrete_crossings is not None
        assert state.crossing_report.total <= state.pre_discrete_crossings
        runs += 1
    assert runs == 50
    print(f"\nACCEPTANCE 4 PASS: discrete phase never exceeded the "
          f"post-relax crossing total in {runs}/50 end-to-end runs")


def test_acceptance_5_geometric_invariants():
    twin = bundle(twin_hypergraph())
    cases = list(seeded_runs(10, first_seed=500))
    cases.append((twin, fast_config(seed=510), run_layout(twin, fast_config(seed=510))))
    for g, cfg, state in cases:
        rendered = state.paper_positions()
        residuals = np.abs(cfg.outer_oval.equation_value(rendered[:, 0], rendered[:, 1]))
        assert residuals.max() <= 1e-12
        for point in state.pendant_positions.values():
            assert point_oval_class(point, cfg.outer_oval) == "outside"
        assert np.all(state.free_positions[:, 0] >= 0)
        assert np.all(state.free_positions[:, 0] <= cfg.canvas_width)
        assert np.all(state.free_positions[:, 1] >= 0)
        assert np.all(state.free_positions[:, 1] <= cfg.canvas_height)
    print(f"\nACCEPTANCE 5 PASS: slots on the oval within 1e-12, all "
          f"pendants outside, all free positions in canvas ({len(cases)} runs)")


def test_acceptance_6_encoding_invariants():
    twin = bundle(twin_hypergraph())
    cfg = fast_config(seed=600)
    state = run_layout(twin, cfg)
    styled = assign_styles(twin, state)
    paper_nodes = [n for n in styled.nodes if n.kind == "paper"]
    fill = {int(n.id[1:]): n.color for n in paper_nodes}
    for link in styled.links:
        assert link.color == fill[link.paper]
    for node in paper_nodes:
        assert node.color == CARDINALITY_PALETTE[node.cardinality]
    radii = sorted({(n.multiplicity, n.radius) for n in paper_nodes})
    for (m1, r1), (m2, r2) in zip(radii, radii[1:]):
        if m2 > m1:
            assert r2 > r1
    assert CARDINALITY_PALETTE == {1: "#1f4e9c", 2: "#1a7a3a", 3: "#7fd24a", 4: "#f2d21f"}
    print("\nACCEPTANCE 6 PASS: links share their paper-node color, radii "
          "increase with multiplicity, palette matches the cardinality coding")


def test_acceptance_7_determinism(tmp_path):
    source = tmp_path / "net.json"
    source.write_bytes(twin_json_bytes())
    fast = ["--iterations", "60", "--mdc-rounds", "4", "--swap-attempts", "15",
            "--post-swap-iters", "8"]
    for seed in range(10):
        outputs = []
        for attempt in ("a", "b"):
            svg = tmp_path / f"{seed}{attempt}.svg"
            dump = tmp_path / f"{seed}{attempt}.json"
            code = cli_main([
                "-i", str(source), "-o", str(svg), "--dump", str(dump),
                "--seed", str(seed), *fast,
            ])
            assert code == 0
            outputs.append((svg.read_bytes(), dump.read_bytes()))
        assert outputs[0] == outputs[1]
    print("\nACCEPTANCE 7 PASS: byte-identical SVG and JSON dump across "
          "repeat runs for 10 distinct seeds")


def test_acceptance_8_convergence_behaviour():
    g = bundle(twin_hypergraph())
    converged = 0
    for seed in range(20):
        cfg = LayoutConfig(seed=seed)
        s = initial_positioning(g, cfg)
        relax(g, s, cfg, cfg.max_iterations)
        if s.last_relax_iterations < cfg.max_iterations:
            converged += 1
    assert converged >= 18

    cfg = LayoutConfig(seed=8)
    started = time.perf_counter()
    run_layout(g, cfg)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    print(f"\nACCEPTANCE 8 PASS: relax converged before the cap in "
          f"{converged}/20 default runs; default pipeline took {elapsed:.2f} s")


def test_acceptance_9_force_model_check():
    for d, k in ((3.7, 12.0), (150.0, 42.0), (0.5, 2.0)):
        assert attraction_magnitude(d, k) == pytest.approx(d * d / k, rel=1e-12)
        assert repulsion_magnitude(d, k) == pytest.approx(k * k / d, rel=1e-12)

    rng = np.random.default_rng(900)
    checked = 0
    for _ in range(30):
        g = random_bundled(rng, max_authors=7, max_edges=5)
        cfg = fast_config(seed=int(rng.integers(100000)))
        s = initial_positioning(g, cfg)
        s.free_positions = rng.uniform(100, 900, s.free_positions.shape)
        forces = compute_forces(g, s, cfg)
        k = ideal_edge_length(g, s, cfg)
        author_pos = {
            int(a): (float(x), float(y))
            for a, (x, y) in zip(s.free_authors, s.free_positions)
        }
        paper_pos = {
            p.index: tuple(map(float, s.paper_position(p.index))) for p in g.paper_nodes
        }
        free_links = [(a, p) for a, p in g.links if a in author_pos]
        expected = resummed_forces(author_pos, paper_pos, free_links, k)
        for row, author in enumerate(s.free_authors):
            assert forces[row] == pytest.approx(expected[int(author)], abs=1e-9)
        checked += 1
    print(f"\nACCEPTANCE 9 PASS: net forces match the naive re-summation "
          f"within 1e-9 on {checked} random configurations; magnitude "
          f"formulas exact to 1e-12")
