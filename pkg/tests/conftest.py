"""Shared fixtures: a synthetic benchmark network and random generators.

The "twin" is a deterministic co-authorship network with fixed structural
statistics: 33 authors, 48 hyperedges of sizes 1-4 whose distinct member
sets number 30, so bundling takes 81 total nodes down to 63.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperlay.model import BundledGraph, Hypergraph, bundle


def twin_hypergraph() -> Hypergraph:
    authors = tuple(f"a{i:02d}" for i in range(33))
    edges: list[tuple[int, ...]] = []
    for i in range(6):
        edges.append((i,))
    for i in range(10):
        edges.append((6 + i, 6 + (i + 1) % 10))
    for i in range(8):
        edges.append((16 + i, 16 + (i + 1) % 8, 16 + (i + 2) % 8))
    for i in range(6):
        edges.append((24 + i, 25 + i, 26 + i, 27 + i))
    edges.extend(edges[:18])
    assert len(edges) == 48
    assert len({tuple(sorted(e)) for e in edges}) == 30
    assert {i for e in edges for i in e} == set(range(33))
    return Hypergraph(authors, tuple(edges))


def twin_json_bytes() -> bytes:
    h = twin_hypergraph()
    return json.dumps(
        {"authors": list(h.authors), "hyperedges": [list(e) for e in h.hyperedges]}
    ).encode()


@pytest.fixture
def twin() -> Hypergraph:
    return twin_hypergraph()


@pytest.fixture
def twin_bundled() -> BundledGraph:
    return bundle(twin_hypergraph())


def random_hypergraph(rng: np.random.Generator, max_authors=25, max_edges=20) -> Hypergraph:
    n_authors = int(rng.integers(4, max_authors + 1))
    n_edges = int(rng.integers(3, max_edges + 1))
    edges = []
    for _ in range(n_edges):
        size = int(rng.integers(1, min(4, n_authors) + 1))
        members = rng.choice(n_authors, size=size, replace=False)
        edges.append(tuple(int(v) for v in members))
    return Hypergraph(tuple(f"a{i}" for i in range(n_authors)), tuple(edges))


def random_bundled(rng: np.random.Generator, max_authors=25, max_edges=20) -> BundledGraph:
    return bundle(random_hypergraph(rng, max_authors, max_edges))


def random_links(rng: np.random.Generator, g: BundledGraph, span=100.0):
    """Spec-shaped link list with random endpoint coordinates.

    Every author keeps a single position shared by all its links, as a
    real layout would.
    """
    author_pos = {a.index: (float(x), float(y))
                  for a, (x, y) in zip(g.author_nodes, rng.uniform(0, span, (g.n_authors, 2)))}
    paper_pos = {p.index: (float(x), float(y))
                 for p, (x, y) in zip(g.paper_nodes, rng.uniform(0, span, (g.n_papers, 2)))}
    return [(author_pos[a], paper_pos[p], p) for a, p in g.links]
