"""Independent reference implementations used as test oracles.

Everything here is deliberately written with plain Python floats and
loops, separate from the vectorised production code paths it checks.
"""

from __future__ import annotations

import math


def parametric_segments_cross(p1, p2, q1, q2) -> bool:
    """Proper segment intersection via the parametric line equations.

    Solves p1 + t*(p2-p1) = q1 + u*(q2-q1) and requires both parameters
    strictly inside (0, 1).
    """
    rx, ry = p2[0] - p1[0], p2[1] - p1[1]
    sx, sy = q2[0] - q1[0], q2[1] - q1[1]
    denominator = rx * sy - ry * sx
    if abs(denominator) < 1e-12:
        return False
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    t = (wx * sy - wy * sx) / denominator
    u = (wx * ry - wy * rx) / denominator
    return 0.0 < t < 1.0 and 0.0 < u < 1.0


def brute_force_report(links):
    """All-pairs crossing census: (total, per_paper dict).

    Pairs of the same paper-node and pairs sharing an endpoint coordinate
    are skipped, matching the crossing definition.
    """
    link_list = list(links)
    per_paper = {}
    for _, _, paper in link_list:
        per_paper.setdefault(int(paper), 0)
    total = 0
    for i in range(len(link_list)):
        a1, a2, pa = link_list[i]
        for j in range(i + 1, len(link_list)):
            b1, b2, pb = link_list[j]
            if pa == pb:
                continue
            if a1 in (b1, b2) or a2 in (b1, b2):
                continue
            if parametric_segments_cross(a1, a2, b1, b2):
                total += 1
                per_paper[int(pa)] += 1
                per_paper[int(pb)] += 1
    return total, per_paper


def resummed_forces(author_positions, paper_positions, links, k):
    """Naive per-node force summation.

    ``author_positions`` maps author id -> (x, y) for the free authors,
    ``paper_positions`` maps paper id -> (x, y), ``links`` is a list of
    (author id, paper id) pairs restricted to free authors.  Returns a dict
    author id -> (fx, fy).
    """
    forces = {a: [0.0, 0.0] for a in author_positions}
    authors = list(author_positions)
    for i, a in enumerate(authors):
        ax, ay = author_positions[a]
        for b in authors[i + 1:]:
            bx, by = author_positions[b]
            dx, dy = ax - bx, ay - by
            d = math.hypot(dx, dy)
            magnitude = k * k / d
            forces[a][0] += dx / d * magnitude
            forces[a][1] += dy / d * magnitude
            forces[b][0] -= dx / d * magnitude
            forces[b][1] -= dy / d * magnitude
        for px, py in paper_positions.values():
            dx, dy = ax - px, ay - py
            d = math.hypot(dx, dy)
            magnitude = k * k / d
            forces[a][0] += dx / d * magnitude
            forces[a][1] += dy / d * magnitude
    for a, p in links:
        ax, ay = author_positions[a]
        px, py = paper_positions[p]
        dx, dy = ax - px, ay - py
        d = math.hypot(dx, dy)
        magnitude = d * d / k
        forces[a][0] -= dx / d * magnitude
        forces[a][1] -= dy / d * magnitude
    return {a: tuple(f) for a, f in forces.items()}
