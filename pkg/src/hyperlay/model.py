"""Hypergraph input, star expansion, and hyperedge bundling.

A co-authorship network arrives as a hypergraph: authors are vertices and
every publication is a hyperedge (the set of its authors).  Teams that
publish repeatedly produce hyperedges that are identical as sets, so the
hyperedge list is a multiset.  Bundling merges identical sets into a single
paper-node carrying a multiplicity, and the bundled star expansion is the
bipartite graph the layout engine actually draws: one node per author, one
node per distinct author set, linked by membership.

Author-nodes incident to exactly one link after bundling are *pendant*;
they are drawn pinned next to their paper-node instead of floating freely.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass


class HypergraphError(ValueError):
    """Base class for all hypergraph input errors."""


class ParseError(HypergraphError):
    """Malformed input syntax, with a position when one is known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(HypergraphError):
    """Structurally valid input that violates a hypergraph invariant."""


class UnknownAuthorError(ValidationError):
    """A hyperedge references an author index outside the author list."""


@dataclass(frozen=True)
class Hypergraph:
    """Author identifiers plus a multiset of hyperedges (author index sets).

    Hyperedges are normalised to ascending index tuples; order of the list
    is preserved because bundling keys first appearance.  ``labels`` is
    either empty or one optional label per hyperedge.
    """

    authors: tuple[str, ...]
    hyperedges: tuple[tuple[int, ...], ...]
    labels: tuple[str | None, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "authors", tuple(self.authors))
        object.__setattr__(
            self, "hyperedges", tuple(tuple(sorted(edge)) for edge in self.hyperedges)
        )
        if len(set(self.authors)) != len(self.authors):
            raise ValidationError("author identifiers must be pairwise distinct")
        labels = tuple(self.labels)
        if not labels:
            labels = (None,) * len(self.hyperedges)
        elif len(labels) != len(self.hyperedges):
            raise ValidationError(
                f"got {len(labels)} labels for {len(self.hyperedges)} hyperedges"
            )
        object.__setattr__(self, "labels", labels)
        for position, edge in enumerate(self.hyperedges):
            if not edge:
                raise ValidationError(f"hyperedge {position} is empty")
            for index in edge:
                if not 0 <= index < len(self.authors):
                    raise UnknownAuthorError(
                        f"hyperedge {position} references unknown author index {index}"
                    )
            if len(set(edge)) != len(edge):
                raise ValidationError(f"hyperedge {position} repeats an author")


@dataclass(frozen=True)
class AuthorNode:
    index: int
    identifier: str
    pendant: bool


@dataclass(frozen=True)
class PaperNode:
    index: int
    members: tuple[int, ...]
    cardinality: int
    multiplicity: int
    labels: tuple[str, ...] = ()


@dataclass(frozen=True)
class BundledGraph:
    """Bundled star expansion: author-nodes, paper-nodes, membership links.

    Links are enumerated paper-node-major with members ascending, so all
    downstream output is deterministic.
    """

    author_nodes: tuple[AuthorNode, ...]
    paper_nodes: tuple[PaperNode, ...]
    links: tuple[tuple[int, int], ...]

    @property
    def n_authors(self) -> int:
        return len(self.author_nodes)

    @property
    def n_papers(self) -> int:
        return len(self.paper_nodes)

    @property
    def total_nodes(self) -> int:
        return self.n_authors + self.n_papers


def parse_hypergraph(data: bytes | str, format: str = "json") -> Hypergraph:
    """Parse a hypergraph from bytes (UTF-8) or text.

    Two input formats are supported:

    * ``json``: an object ``{"authors": [...], "hyperedges": [[...], ...],
      "labels": [...]?}`` with 0-based indices into ``authors``.
    * ``edgelist``: one hyperedge per line of whitespace-separated author
      names; ``#`` starts a comment, blank lines are ignored.  Authors are
      indexed in first-appearance order.

    Raises ParseError for malformed syntax, UnknownAuthorError for an
    out-of-range author index, and ValidationError for everything else the
    grammar allows but the model forbids (empty hyperedge, duplicate author
    inside one hyperedge, duplicate author identifiers).
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 at byte {exc.start}") from None
    else:
        text = data
    if format == "json":
        return _parse_json(text)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise ValueError(f"unknown input format {format!r}")


def _parse_json(text: str) -> Hypergraph:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(document, dict):
        raise ValidationError("top-level JSON value must be an object")

    authors = document.get("authors")
    if not isinstance(authors, list) or not all(isinstance(a, str) for a in authors):
        raise ValidationError('"authors" must be a list of strings')

    hyperedges = document.get("hyperedges")
    if not isinstance(hyperedges, list):
        raise ValidationError('"hyperedges" must be a list of index lists')
    for position, edge in enumerate(hyperedges):
        if not isinstance(edge, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in edge
        ):
            raise ValidationError(f"hyperedge {position} must be a list of integers")

    labels = document.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(
            v is None or isinstance(v, str) for v in labels
        ):
            raise ValidationError('"labels" must be a list of strings')
        labels = tuple(labels)
    else:
        labels = ()

    return Hypergraph(tuple(authors), tuple(tuple(e) for e in hyperedges), labels)


def _parse_edgelist(text: str) -> Hypergraph:
    authors: list[str] = []
    index_of: dict[str, int] = {}
    hyperedges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        seen: set[str] = set()
        edge: list[int] = []
        for token in line.split():
            if token in seen:
                raise ValidationError(
                    f"duplicate author {token!r} in hyperedge on line {lineno}"
                )
            seen.add(token)
            if token not in index_of:
                index_of[token] = len(authors)
                authors.append(token)
            edge.append(index_of[token])
        hyperedges.append(tuple(edge))
    return Hypergraph(tuple(authors), tuple(hyperedges))


def bundle(h: Hypergraph) -> BundledGraph:
    """Merge hyperedges that are identical as sets into single paper-nodes.

    Paper-nodes appear in first-appearance order of their member set, carry
    the count of merged hyperedges as multiplicity, and collect the labels
    of the merged originals.  Pendant flags reflect link incidence in the
    bundled graph.
    """
    order: dict[tuple[int, ...], int] = {}
    multiplicities: list[int] = []
    collected_labels: list[list[str]] = []
    for edge, label in zip(h.hyperedges, h.labels):
        if edge not in order:
            order[edge] = len(order)
            multiplicities.append(0)
            collected_labels.append([])
        position = order[edge]
        multiplicities[position] += 1
        if label is not None:
            collected_labels[position].append(label)

    paper_nodes = tuple(
        PaperNode(
            index=position,
            members=members,
            cardinality=len(members),
            multiplicity=multiplicities[position],
            labels=tuple(collected_labels[position]),
        )
        for members, position in order.items()
    )
    links = tuple(
        (author, paper.index) for paper in paper_nodes for author in paper.members
    )
    degree = Counter(author for author, _ in links)
    author_nodes = tuple(
        AuthorNode(index=i, identifier=name, pendant=degree.get(i, 0) == 1)
        for i, name in enumerate(h.authors)
    )
    return BundledGraph(author_nodes, paper_nodes, links)


def degree_profile(g: BundledGraph) -> tuple[dict[int, int], dict[str, int]]:
    """Cardinality histogram plus weighted publication counts per author.

    Publication counts sum the multiplicities of incident paper-nodes, so
    bundling loses no papers.
    """
    cardinalities = Counter(paper.cardinality for paper in g.paper_nodes)
    publications = {author.identifier: 0 for author in g.author_nodes}
    for paper in g.paper_nodes:
        for member in paper.members:
            publications[g.author_nodes[member].identifier] += paper.multiplicity
    return dict(sorted(cardinalities.items())), publications
