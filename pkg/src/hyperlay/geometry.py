"""Oval slot geometry and exact crossing counts for straight-line links.

Paper-nodes sit on equally spaced slots of an oval and every link is a
straight segment.  A crossing is a proper interior intersection of two
links that share no endpoint node; counts are exact O(L^2) pairwise tests,
which is all a desk-scale co-authorship network needs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# |orientation determinant| below this is treated as collinear.  Coordinates
# live on a bounded canvas, so an absolute epsilon is safe.
ORIENTATION_EPSILON = 1e-9

# tolerance on the ellipse equation when classifying a point as "on"
OVAL_BOUNDARY_EPSILON = 1e-9


@dataclass(frozen=True)
class Oval:
    """Axis-aligned ellipse with strictly positive semi-axes."""

    center: tuple[float, float]
    semi_axis_x: float
    semi_axis_y: float

    def __post_init__(self):
        if not (self.semi_axis_x > 0 and self.semi_axis_y > 0):
            raise ValueError("oval semi-axes must be strictly positive")

    def equation_value(self, x, y):
        """((x-cx)/a)^2 + ((y-cy)/b)^2 - 1: negative inside, positive outside."""
        cx, cy = self.center
        return ((x - cx) / self.semi_axis_x) ** 2 + ((y - cy) / self.semi_axis_y) ** 2 - 1.0

    def scaled(self, factor: float) -> "Oval":
        return Oval(self.center, self.semi_axis_x * factor, self.semi_axis_y * factor)


@dataclass
class CrossingReport:
    """Total crossings plus each paper-node's share.

    A crossing between links of two different paper-nodes counts once in
    each node's share; one between two links of the same paper-node would
    count once (such links meet at the paper-node and cannot properly
    cross, but the rule keeps the shares well defined).
    """

    total: int
    per_paper: dict[int, int]

    def share(self, paper_index: int) -> int:
        return self.per_paper.get(paper_index, 0)


def oval_slots(count: int, oval: Oval, angle_offset: float = 0.0) -> np.ndarray:
    """Coordinates of ``count`` equally spaced slots on the oval, shape (count, 2).

    Slot i sits at angle ``angle_offset + 2*pi*i/count``.
    """
    if count < 1:
        raise ValueError("need at least one slot")
    angles = angle_offset + 2.0 * np.pi * np.arange(count) / count
    cx, cy = oval.center
    return np.column_stack(
        (cx + oval.semi_axis_x * np.cos(angles), cy + oval.semi_axis_y * np.sin(angles))
    )


def point_oval_class(point, oval: Oval) -> str:
    """Classify a point as ``"inside"``, ``"on"``, or ``"outside"`` the oval."""
    value = float(oval.equation_value(point[0], point[1]))
    if abs(value) <= OVAL_BOUNDARY_EPSILON:
        return "on"
    return "inside" if value < 0 else "outside"


def _sign(value: float) -> int:
    if abs(value) < ORIENTATION_EPSILON:
        return 0
    return 1 if value > 0 else -1


def segments_cross(p1, p2, q1, q2) -> bool:
    """True iff the open segments (p1,p2) and (q1,q2) properly intersect.

    Segments sharing an endpoint (exact coordinate equality) and collinear
    overlaps do not count.  Orientation determinants within
    ORIENTATION_EPSILON of zero are treated as collinear.
    """
    s1 = _sign((p2[0] - p1[0]) * (q1[1] - p1[1]) - (p2[1] - p1[1]) * (q1[0] - p1[0]))
    s2 = _sign((p2[0] - p1[0]) * (q2[1] - p1[1]) - (p2[1] - p1[1]) * (q2[0] - p1[0]))
    s3 = _sign((q2[0] - q1[0]) * (p1[1] - q1[1]) - (q2[1] - q1[1]) * (p1[0] - q1[0]))
    s4 = _sign((q2[0] - q1[0]) * (p2[1] - q1[1]) - (q2[1] - q1[1]) * (p2[0] - q1[0]))
    return s1 * s2 < 0 and s3 * s4 < 0


def _sign_array(values: np.ndarray) -> np.ndarray:
    signs = np.sign(values)
    signs[np.abs(values) < ORIENTATION_EPSILON] = 0.0
    return signs


def segment_cross_matrix(
    p_start: np.ndarray, p_end: np.ndarray, q_start: np.ndarray, q_end: np.ndarray
) -> np.ndarray:
    """Vectorised segments_cross: (n,2)/(n,2) vs (m,2)/(m,2) -> (n,m) bools.

    Uses the same orientation arithmetic as the scalar predicate, so both
    agree bit for bit.
    """
    ax = p_start[:, 0][:, None]
    ay = p_start[:, 1][:, None]
    bx = p_end[:, 0][:, None]
    by = p_end[:, 1][:, None]
    cx = q_start[:, 0][None, :]
    cy = q_start[:, 1][None, :]
    dx = q_end[:, 0][None, :]
    dy = q_end[:, 1][None, :]

    s1 = _sign_array((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))
    s2 = _sign_array((bx - ax) * (dy - ay) - (by - ay) * (dx - ax))
    s3 = _sign_array((dx - cx) * (ay - cy) - (dy - cy) * (ax - cx))
    s4 = _sign_array((dx - cx) * (by - cy) - (dy - cy) * (bx - cx))
    return (s1 * s2 < 0) & (s3 * s4 < 0)


def count_crossings(links) -> CrossingReport:
    """Exact total and per-paper-node crossing counts.

    ``links`` is a sequence of ``(endpoint, endpoint, paper_index)``.  Link
    pairs belonging to the same paper-node never count; pairs sharing an
    author-node meet at an identical endpoint coordinate and drop out of
    the proper-intersection predicate.
    """
    link_list = list(links)
    count = len(link_list)
    starts = np.array([link[0] for link in link_list], dtype=float).reshape(count, 2)
    ends = np.array([link[1] for link in link_list], dtype=float).reshape(count, 2)
    papers = np.array([link[2] for link in link_list], dtype=int).reshape(count)
    if not (np.all(np.isfinite(starts)) and np.all(np.isfinite(ends))):
        raise ValueError("link coordinates must be finite")

    per_paper: dict[int, int] = {}
    for paper in papers:
        per_paper.setdefault(int(paper), 0)
    if count < 2:
        return CrossingReport(0, per_paper)

    crossing = segment_cross_matrix(starts, ends, starts, ends)
    upper_i, upper_j = np.triu_indices(count, k=1)
    hits = crossing[upper_i, upper_j] & (papers[upper_i] != papers[upper_j])
    for i, j in zip(upper_i[hits], upper_j[hits]):
        first, second = int(papers[i]), int(papers[j])
        per_paper[first] += 1
        if second != first:
            per_paper[second] += 1
    return CrossingReport(int(np.count_nonzero(hits)), per_paper)
