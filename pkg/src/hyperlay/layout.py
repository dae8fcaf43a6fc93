"""Mixed-coordinate layout pipeline.

Three coordinate classes share one drawing: paper-nodes are *semi-fixed*,
pinned to equally spaced slots on an outer oval and movable only by slot
permutation; non-pendant author-nodes are *free*, relaxed inside the canvas
by a modified Fruchterman-Reingold force model; pendant author-nodes are
*fixed*, derived from their paper-node's position at the very end and
placed just outside the oval.

The continuous phase (``relax``) moves free nodes until the relative energy
decrease between consecutive iterations drops below a threshold.  The
discrete phase (``mixed_discrete_continuous``) samples paper-node pairs
weighted by their crossing share and commits a slot swap only when it
strictly reduces the number of link crossings, re-relaxing the free nodes
after every committed swap.

The pipeline mutates a single LayoutState in place; distinct runs are
independent and the whole result is a deterministic function of
(input, config, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import (
    CrossingReport,
    Oval,
    count_crossings,
    oval_slots,
    point_oval_class,
    segment_cross_matrix,
)
from .model import BundledGraph

# denominator guard for relative energy decrease
ENERGY_EPSILON = 1e-12

# node pairs closer than this get a deterministic fallback direction
MIN_SEPARATION = 1e-9

# the temperature never cools below this fraction of its initial value
TEMPERATURE_FLOOR_FACTOR = 1e-3

# fan-out between pendant siblings around the outward radial direction,
# and the step used to pull a fan position back when it lands inside
PENDANT_FAN_STEP = math.radians(15.0)
PENDANT_RESCUE_STEP = math.radians(5.0)


def default_outer_oval(canvas_width: float, canvas_height: float) -> Oval:
    return Oval(
        (canvas_width / 2.0, canvas_height / 2.0),
        0.42 * canvas_width,
        0.42 * canvas_height,
    )


@dataclass
class LayoutConfig:
    """All layout tunables.

    Unset ovals and temperature are derived from the canvas: the outer oval
    spans 0.42 of each dimension, the inner oval is the outer scaled by
    0.5, and the initial temperature is a tenth of the smaller canvas side.
    """

    canvas_width: float = 1000.0
    canvas_height: float = 700.0
    outer_oval: Oval | None = None
    inner_oval: Oval | None = None
    fr_constant: float = 0.9
    initial_temperature: float | None = None
    cooling: float = 0.95
    energy_threshold: float = 1e-3
    max_iterations: int = 500
    discrete_rounds: int = 50
    swap_attempts: int = 100
    post_swap_iterations: int = 50
    pendant_radius_factor: float = 0.35
    seed: int = 0

    def __post_init__(self):
        if not (self.canvas_width > 0 and self.canvas_height > 0):
            raise ValueError("canvas dimensions must be positive")
        if self.outer_oval is None:
            self.outer_oval = default_outer_oval(self.canvas_width, self.canvas_height)
        if self.inner_oval is None:
            self.inner_oval = self.outer_oval.scaled(0.5)
        if self.initial_temperature is None:
            self.initial_temperature = 0.1 * min(self.canvas_width, self.canvas_height)
        if self.initial_temperature <= 0:
            raise ValueError("initial temperature must be positive")
        if not 0.0 < self.cooling < 1.0:
            raise ValueError("cooling factor must lie in (0, 1)")
        if self.energy_threshold <= 0:
            raise ValueError("energy threshold must be positive")
        if self.fr_constant <= 0:
            raise ValueError("force constant must be positive")
        if self.pendant_radius_factor <= 0:
            raise ValueError("pendant radius factor must be positive")
        for name in ("max_iterations", "discrete_rounds", "swap_attempts", "post_swap_iterations"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        probe = oval_slots(64, self.inner_oval)
        if any(point_oval_class(p, self.outer_oval) != "inside" for p in probe):
            raise ValueError("inner oval must lie strictly inside the outer oval")


@dataclass
class LayoutState:
    """Mutable layout snapshot.

    Paper-node p is rendered exactly at ``slots[slot_of_paper[p]]``; free
    author positions are one row per entry of ``free_authors`` (ascending
    author index); pendant positions stay empty until ``place_pendants``
    writes them, exactly once.
    """

    slot_of_paper: np.ndarray
    slots: np.ndarray
    free_authors: np.ndarray
    free_positions: np.ndarray
    pendant_positions: dict[int, tuple[float, float]] = field(default_factory=dict)
    energy_history: tuple[float, ...] = ()
    crossing_report: CrossingReport | None = None
    pre_discrete_crossings: int | None = None
    last_relax_iterations: int = 0
    rng: np.random.Generator = field(default_factory=np.random.default_rng)

    def paper_positions(self) -> np.ndarray:
        return self.slots[self.slot_of_paper]

    def paper_position(self, paper_index: int) -> np.ndarray:
        return self.slots[self.slot_of_paper[paper_index]]

    def author_position(self, author_index: int) -> tuple[float, float]:
        if author_index in self.pendant_positions:
            return self.pendant_positions[author_index]
        row = int(np.searchsorted(self.free_authors, author_index))
        if row < len(self.free_authors) and self.free_authors[row] == author_index:
            return (float(self.free_positions[row, 0]), float(self.free_positions[row, 1]))
        raise KeyError(f"author-node {author_index} has no position yet")


def initial_positioning(g: BundledGraph, cfg: LayoutConfig) -> LayoutState:
    """Pin paper-nodes to outer-oval slots (identity permutation) and spread
    non-pendant author-nodes around the inner oval at a seeded random angle
    offset; pendant author-nodes stay unplaced."""
    paper_count = g.n_papers
    if paper_count < 1:
        raise ValueError("layout needs at least one paper-node")
    rng = np.random.default_rng(cfg.seed)
    slots = oval_slots(paper_count, cfg.outer_oval)
    free = np.array(
        [author.index for author in g.author_nodes if not author.pendant], dtype=int
    )
    offset = float(rng.uniform(0.0, 2.0 * math.pi))
    if len(free):
        positions = oval_slots(len(free), cfg.inner_oval, offset)
    else:
        positions = np.zeros((0, 2))
    return LayoutState(
        slot_of_paper=np.arange(paper_count),
        slots=slots,
        free_authors=free,
        free_positions=positions,
        rng=rng,
    )


def attraction_magnitude(distance, k):
    """Fruchterman-Reingold attraction d^2/k along a link."""
    return distance * distance / k

def repulsion_magnitude(distance, k):
    """Fruchterman-Reingold repulsion k^2/d between node pairs."""
    return k * k / distance


def ideal_edge_length(g: BundledGraph, s: LayoutState, cfg: LayoutConfig) -> float:
    """k = C * sqrt(canvas area / active node count); active nodes are the
    free author-nodes plus all paper-nodes."""
    active = len(s.free_authors) + g.n_papers
    return cfg.fr_constant * math.sqrt(cfg.canvas_width * cfg.canvas_height / active)


def _pair_direction(low: int, high: int) -> np.ndarray:
    # deterministic unit vector for coincident node pairs, keyed by ids only
    mixed = (low * 2654435761 + high * 40503 + 12582917) % 4294967296
    angle = 2.0 * math.pi * mixed / 4294967296.0
    return np.array([math.cos(angle), math.sin(angle)])


def _coincident_fallback(delta, dist, ids_a, ids_b):
    # Replace near-zero separations with MIN_SEPARATION along a direction
    # derived from the pair ids; antisymmetric so paired forces stay equal
    # and opposite.
    for i, j in np.argwhere(dist < MIN_SEPARATION):
        id_a, id_b = int(ids_a[i]), int(ids_b[j])
        if id_a == id_b:
            continue
        direction = _pair_direction(min(id_a, id_b), max(id_a, id_b))
        if id_a > id_b:
            direction = -direction
        delta[i, j] = direction
        dist[i, j] = MIN_SEPARATION


def compute_forces(g: BundledGraph, s: LayoutState, cfg: LayoutConfig) -> np.ndarray:
    """Net force on each free author-node, one row per ``free_authors`` entry.

    Three O(n^2) contributions: repulsion between all free author pairs,
    repulsion between every (free author, paper-node) pair, and attraction
    along every link whose author end is free.  Paper-nodes and pendant
    author-nodes receive no force.
    """
    free_count = len(s.free_authors)
    forces = np.zeros((free_count, 2))
    if free_count == 0:
        return forces
    positions = s.free_positions
    paper_pos = s.paper_positions()
    k = ideal_edge_length(g, s, cfg)
    author_ids = s.free_authors
    # paper ids live in a separate range so fallback directions never collide
    paper_ids = g.n_authors + np.arange(g.n_papers)

    delta = positions[:, None, :] - positions[None, :, :]
    dist = np.hypot(delta[..., 0], delta[..., 1])
    np.fill_diagonal(dist, np.inf)
    _coincident_fallback(delta, dist, author_ids, author_ids)
    repulsion = repulsion_magnitude(dist, k)
    forces += np.sum(delta / dist[..., None] * repulsion[..., None], axis=1)

    if g.n_papers:
        delta = positions[:, None, :] - paper_pos[None, :, :]
        dist = np.hypot(delta[..., 0], delta[..., 1])
        _coincident_fallback(delta, dist, author_ids, paper_ids)
        repulsion = repulsion_magnitude(dist, k)
        forces += np.sum(delta / dist[..., None] * repulsion[..., None], axis=1)

    rows = {int(author): row for row, author in enumerate(s.free_authors)}
    link_rows = []
    link_papers = []
    for author, paper in g.links:
        row = rows.get(author)
        if row is not None:
            link_rows.append(row)
            link_papers.append(paper)
    if link_rows:
        row_idx = np.array(link_rows)
        paper_idx = np.array(link_papers)
        delta = positions[row_idx] - paper_pos[paper_idx]
        dist = np.hypot(delta[:, 0], delta[:, 1])
        for pos in np.nonzero(dist < MIN_SEPARATION)[0]:
            id_a = int(author_ids[row_idx[pos]])
            id_b = int(paper_ids[paper_idx[pos]])
            direction = _pair_direction(min(id_a, id_b), max(id_a, id_b))
            delta[pos] = direction if id_a < id_b else -direction
            dist[pos] = MIN_SEPARATION
        attraction = attraction_magnitude(dist, k)
        np.add.at(forces, row_idx, -delta / dist[:, None] * attraction[:, None])
    return forces


def total_energy(forces: np.ndarray) -> float:
    """Layout energy: sum of squared net-force magnitudes of the free nodes."""
    return float(np.sum(forces * forces))


def relative_energy_drop(history: tuple[float, ...]) -> float:
    if len(history) < 2:
        return math.inf
    previous, current = history[-2], history[-1]
    return abs(previous - current) / max(current, ENERGY_EPSILON)


def relax(g: BundledGraph, s: LayoutState, cfg: LayoutConfig, budget: int) -> LayoutState:
    """Force-relax the free author-nodes in place.

    Each iteration computes forces, records the energy, moves every free
    node along its net force capped by the current temperature, clamps into
    the canvas, and cools.  The loop stops once the relative energy
    decrease falls below ``energy_threshold`` or the budget is spent.
    Paper slots and pendants are untouched.
    """
    temperature = cfg.initial_temperature
    floor = TEMPERATURE_FLOOR_FACTOR * cfg.initial_temperature
    iterations = 0
    for _ in range(budget):
        if relative_energy_drop(s.energy_history) < cfg.energy_threshold:
            break
        iterations += 1
        forces = compute_forces(g, s, cfg)
        s.energy_history = (s.energy_history + (total_energy(forces),))[-2:]
        if len(s.free_positions):
            norms = np.hypot(forces[:, 0], forces[:, 1])
            steps = np.minimum(norms, temperature)
            moving = norms > 0
            s.free_positions[moving] += (
                forces[moving] / norms[moving, None] * steps[moving, None]
            )
            np.clip(s.free_positions[:, 0], 0.0, cfg.canvas_width, out=s.free_positions[:, 0])
            np.clip(s.free_positions[:, 1], 0.0, cfg.canvas_height, out=s.free_positions[:, 1])
        temperature = max(temperature * cfg.cooling, floor)
    s.last_relax_iterations = iterations
    return s


def _link_arrays(g: BundledGraph, s: LayoutState) -> tuple[np.ndarray, np.ndarray]:
    """Author endpoint and paper index per non-pendant link.

    Pendant links are excluded from all crossing computations: pendants are
    placed last, outside the oval, where they are nearly crossing-free by
    construction.
    """
    rows = {int(author): row for row, author in enumerate(s.free_authors)}
    link_rows = []
    link_papers = []
    for author, paper in g.links:
        row = rows.get(author)
        if row is not None:
            link_rows.append(row)
            link_papers.append(paper)
    if not link_rows:
        return np.zeros((0, 2)), np.zeros(0, dtype=int)
    return s.free_positions[np.array(link_rows)], np.array(link_papers, dtype=int)


def crossing_links(g: BundledGraph, s: LayoutState):
    """Non-pendant links as (author endpoint, paper endpoint, paper index)."""
    author_pos, papers = _link_arrays(g, s)
    paper_pos = s.slots[s.slot_of_paper[papers]] if len(papers) else np.zeros((0, 2))
    return [
        (
            (float(author_pos[i, 0]), float(author_pos[i, 1])),
            (float(paper_pos[i, 0]), float(paper_pos[i, 1])),
            int(papers[i]),
        )
        for i in range(len(papers))
    ]


def current_crossings(g: BundledGraph, s: LayoutState) -> CrossingReport:
    return count_crossings(crossing_links(g, s))


def _crossings_touching(
    author_pos: np.ndarray,
    paper_pos: np.ndarray,
    papers: np.ndarray,
    touched: np.ndarray,
) -> int:
    # crossing pairs with at least one touched link
    t_author, t_paper, t_ids = author_pos[touched], paper_pos[touched], papers[touched]
    o_author, o_paper = author_pos[~touched], paper_pos[~touched]
    total = 0
    if len(t_ids) and len(o_author):
        total += int(np.count_nonzero(segment_cross_matrix(t_author, t_paper, o_author, o_paper)))
    if len(t_ids) > 1:
        crossing = segment_cross_matrix(t_author, t_paper, t_author, t_paper)
        upper_i, upper_j = np.triu_indices(len(t_ids), k=1)
        total += int(
            np.count_nonzero(crossing[upper_i, upper_j] & (t_ids[upper_i] != t_ids[upper_j]))
        )
    return total


def swap_delta(g: BundledGraph, s: LayoutState, p1: int, p2: int) -> int:
    """Exact change in total crossings if paper-nodes p1 and p2 swapped slots.

    Only link pairs touching p1 or p2 are recounted; all other pairs are
    unaffected by the swap, so the result equals a full recount difference.
    """
    if p1 == p2:
        raise ValueError("swap candidates must be distinct paper-nodes")
    author_pos, papers = _link_arrays(g, s)
    if len(papers) == 0:
        return 0
    slot = s.slot_of_paper
    paper_pos = s.slots[slot[papers]]
    swapped = slot.copy()
    swapped[[p1, p2]] = slot[[p2, p1]]
    paper_pos_after = s.slots[swapped[papers]]
    touched = (papers == p1) | (papers == p2)
    before = _crossings_touching(author_pos, paper_pos, papers, touched)
    after = _crossings_touching(author_pos, paper_pos_after, papers, touched)
    return after - before


def choose_swap_candidates(
    s: LayoutState, report: CrossingReport, rng: np.random.Generator
) -> tuple[int, int] | None:
    """Draw two distinct paper-nodes, each independently with probability
    proportional to its crossing share plus one (so zero-share nodes stay
    eligible).  Returns None when fewer than two paper-nodes exist."""
    paper_count = len(s.slot_of_paper)
    if paper_count < 2:
        return None
    weights = np.array([report.share(p) + 1 for p in range(paper_count)], dtype=float)
    probabilities = weights / weights.sum()
    first = int(rng.choice(paper_count, p=probabilities))
    second = int(rng.choice(paper_count, p=probabilities))
    redraws = 0
    while second == first and redraws < 16:
        second = int(rng.choice(paper_count, p=probabilities))
        redraws += 1
    if second == first:
        others = np.array([p for p in range(paper_count) if p != first])
        second = int(rng.choice(others))
    return first, second


def mixed_discrete_continuous(g: BundledGraph, s: LayoutState, cfg: LayoutConfig) -> LayoutState:
    """One discrete optimisation round.

    Samples candidate pairs until a slot swap strictly reduces the crossing
    count, then commits it, re-relaxes the free nodes, refreshes the
    report, and returns.  The returned state never has more crossings than
    on entry: if the post-swap relaxation drags the count back above the
    entry total, the swap is rolled back and the search continues.  With no
    improving swap inside the attempt budget the state is returned
    unchanged (apart from the generator state).
    """
    if s.crossing_report is None:
        raise ValueError("a current crossing report is required before swapping")
    entry_total = s.crossing_report.total
    if entry_total == 0 or len(s.slot_of_paper) < 2:
        return s
    for _ in range(cfg.swap_attempts):
        candidates = choose_swap_candidates(s, s.crossing_report, s.rng)
        if candidates is None:
            break
        p1, p2 = candidates
        if swap_delta(g, s, p1, p2) >= 0:
            continue
        saved_slots = s.slot_of_paper.copy()
        saved_positions = s.free_positions.copy()
        saved_history = s.energy_history
        s.slot_of_paper[[p1, p2]] = s.slot_of_paper[[p2, p1]]
        s.energy_history = ()  # the swap invalidates the convergence signal
        relax(g, s, cfg, cfg.post_swap_iterations)
        refreshed = current_crossings(g, s)
        if refreshed.total > entry_total:
            s.slot_of_paper = saved_slots
            s.free_positions = saved_positions
            s.energy_history = saved_history
            continue
        s.crossing_report = refreshed
        break
    return s


def _slot_spacing(slots: np.ndarray, oval: Oval) -> float:
    if len(slots) < 2:
        return min(oval.semi_axis_x, oval.semi_axis_y)
    following = np.roll(slots, -1, axis=0)
    return float(np.mean(np.hypot(following[:, 0] - slots[:, 0], following[:, 1] - slots[:, 1])))


def _pendant_radius(s: LayoutState, cfg: LayoutConfig) -> float:
    # Slot spacing grows huge for tiny slot counts; cap the radius by the
    # canvas margin around the oval so pendants stay on the canvas.
    radius = cfg.pendant_radius_factor * _slot_spacing(s.slots, cfg.outer_oval)
    center_x, center_y = cfg.outer_oval.center
    margin = min(
        center_x - cfg.outer_oval.semi_axis_x,
        cfg.canvas_width - center_x - cfg.outer_oval.semi_axis_x,
        center_y - cfg.outer_oval.semi_axis_y,
        cfg.canvas_height - center_y - cfg.outer_oval.semi_axis_y,
    )
    if margin > 0:
        radius = min(radius, 0.9 * margin)
    return radius


def _fan_offset(position_in_fan: int) -> float:
    if position_in_fan == 0:
        return 0.0
    magnitude = (position_in_fan + 1) // 2 * PENDANT_FAN_STEP
    return magnitude if position_in_fan % 2 else -magnitude


def place_pendants(g: BundledGraph, s: LayoutState, cfg: LayoutConfig) -> LayoutState:
    """Pin every pendant author-node on a small circle around its paper-node.

    The circle radius is ``pendant_radius_factor`` of the slot spacing,
    capped by the canvas margin around the oval.  The first pendant sits on
    the outward radial direction from the oval center through the
    paper-node (provably outside the oval), siblings fan out at 15 degree
    increments.  Any fan position that still lands inside is stepped back
    toward the outward direction in 5 degree steps.
    """
    radius = _pendant_radius(s, cfg)
    center_x, center_y = cfg.outer_oval.center
    pendants_of: dict[int, list[int]] = {}
    for author, paper in g.links:
        if g.author_nodes[author].pendant:
            pendants_of.setdefault(paper, []).append(author)
    for paper in sorted(pendants_of):
        paper_x, paper_y = s.paper_position(paper)
        base = math.atan2(paper_y - center_y, paper_x - center_x)
        for fan_position, author in enumerate(sorted(pendants_of[paper])):
            offset = _fan_offset(fan_position)
            point = (
                float(paper_x + radius * math.cos(base + offset)),
                float(paper_y + radius * math.sin(base + offset)),
            )
            while point_oval_class(point, cfg.outer_oval) != "outside" and offset != 0.0:
                shrunk = max(abs(offset) - PENDANT_RESCUE_STEP, 0.0)
                offset = math.copysign(shrunk, offset)
                point = (
                    float(paper_x + radius * math.cos(base + offset)),
                    float(paper_y + radius * math.sin(base + offset)),
                )
            s.pendant_positions[author] = point
    return s


def run_layout(g: BundledGraph, cfg: LayoutConfig) -> LayoutState:
    """Full pipeline: initial placement, continuous relaxation, crossing
    census, repeated discrete rounds, pendant placement."""
    state = initial_positioning(g, cfg)
    relax(g, state, cfg, cfg.max_iterations)
    state.crossing_report = current_crossings(g, state)
    state.pre_discrete_crossings = state.crossing_report.total
    for _ in range(cfg.discrete_rounds):
        mixed_discrete_continuous(g, state, cfg)
    place_pendants(g, state, cfg)
    return state
