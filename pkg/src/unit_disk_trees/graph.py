# graph.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import functools
import logging
from collections.abc import Iterable, Iterator, Mapping
from enum import StrEnum

import networkx as nx

from unit_disk_trees.exceptions import ContractViolationError, GraphParseError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Graph:
    """
    An undirected simple graph over the vertex ids ``0 .. n - 1``.

    Attributes:
        n (int): Number of vertices.
        adjacency (tuple[tuple[int, ...], ...]): Sorted neighbor ids per vertex.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """
        Build a graph from an edge iterable.

        Args:
            n (int): Number of vertices.
            edges (Iterable[tuple[int, int]]): Undirected edges.

        Returns:
            Graph: The graph with symmetric sorted adjacency.

        Raises:
            GraphParseError: On a self-loop, duplicate edge or id out of range.
        """
        if n < 0:
            msg = f"Vertex count must be nonnegative, got {n}"
            raise GraphParseError(msg)
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_edge(n, u, v, neighbors)
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n=n, adjacency=tuple(tuple(sorted(s)) for s in neighbors))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """
        Yield every edge once as ``(u, v)`` with ``u < v``, in sorted order.
        """
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


def _check_edge(
    n: int,
    u: int,
    v: int,
    neighbors: list[set[int]],
    line_number: int | None = None,
) -> None:
    if not (0 <= u < n and 0 <= v < n):
        msg = f"Vertex id out of range [0, {n}) in edge ({u}, {v})"
        raise GraphParseError(msg, line_number)
    if u == v:
        msg = f"Self-loop on vertex {u}"
        raise GraphParseError(msg, line_number)
    if v in neighbors[u]:
        msg = f"Duplicate edge ({u}, {v})"
        raise GraphParseError(msg, line_number)


def parse_graph(text: str) -> Graph:
    """
    Parse an edge-list document.

    The format is an optional header line ``n <count>`` followed by one
    ``u v`` edge per line. Everything after a ``#`` is a comment.

    Args:
        text (str): The document.

    Returns:
        Graph: The parsed graph. Without a header the vertex count is one more
            than the largest id seen.

    Raises:
        GraphParseError: With the offending line number.
    """
    declared: int | None = None
    raw_edges: list[tuple[int, int, int]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if declared is not None or raw_edges or len(tokens) != 2:
                msg = "Header 'n <count>' must appear once, before any edge"
                raise GraphParseError(msg, line_number)
            declared = _parse_int(tokens[1], line_number)
            if declared < 0:
                msg = f"Vertex count must be nonnegative, got {declared}"
                raise GraphParseError(msg, line_number)
            continue
        if len(tokens) != 2:
            msg = f"Expected 'u v', got {line!r}"
            raise GraphParseError(msg, line_number)
        u = _parse_int(tokens[0], line_number)
        v = _parse_int(tokens[1], line_number)
        if u < 0 or v < 0:
            msg = f"Negative vertex id in edge ({u}, {v})"
            raise GraphParseError(msg, line_number)
        raw_edges.append((u, v, line_number))
    if declared is None:
        n = 1 + max((max(u, v) for u, v, _ in raw_edges), default=-1)
    else:
        n = declared
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v, line_number in raw_edges:
        _check_edge(n, u, v, neighbors, line_number)
        neighbors[u].add(v)
        neighbors[v].add(u)
    logger.debug(f"Parsed graph with {n} vertices and {len(raw_edges)} edges")
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in neighbors))


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token, 10)
    except ValueError as ve:
        msg = f"Not a decimal integer: {token!r}"
        raise GraphParseError(msg, line_number) from ve


def serialize_graph(g: Graph) -> str:
    """
    Write a graph in the edge-list format, header included, so that isolated
    vertices survive a round trip through `parse_graph`.
    """
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


class TreeKind(StrEnum):
    """
    Most specific tree class of a graph.
    """

    NOT_TREE = "not-tree"
    CATERPILLAR = "caterpillar"
    LOBSTER = "lobster"
    OTHER_TREE = "other-tree"


@dataclasses.dataclass(frozen=True)
class Child:
    """
    A non-backbone neighbor of a backbone vertex.

    Attributes:
        vertex (int): The child's id.
        grandchildren (tuple[int, ...]): Its neighbors other than the backbone
            vertex; always leaves.
    """

    vertex: int
    grandchildren: tuple[int, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.grandchildren) + 1


@dataclasses.dataclass(frozen=True)
class TreeClass:
    """
    Classification result for a graph.

    Attributes:
        kind (TreeKind): The most specific class.
        backbone (tuple[int, ...]): Backbone path, lowest-id endpoint first.
            Empty unless kind is caterpillar or lobster.
        descendants (Mapping[int, tuple[Child, ...]]): Children per backbone
            vertex.
    """

    kind: TreeKind
    backbone: tuple[int, ...] = ()
    descendants: Mapping[int, tuple[Child, ...]] = dataclasses.field(
        default_factory=dict
    )

    @property
    def has_backbone(self) -> bool:
        return self.kind in (TreeKind.CATERPILLAR, TreeKind.LOBSTER)

    @functools.cached_property
    def _positions(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.backbone)}

    def index_of(self, v: int) -> int:
        """
        Position of `v` on the backbone.

        Raises:
            ContractViolationError: If `v` is not a backbone vertex.
        """
        try:
            return self._positions[v]
        except KeyError:
            msg = f"Vertex {v} is not on the backbone"
            raise ContractViolationError(msg) from None


def is_tree(g: Graph) -> bool:
    """
    Check that `g` is nonempty, connected and acyclic.
    """
    return g.n > 0 and nx.is_tree(g.to_networkx())


def leaf_deletion(g: Graph, alive: set[int] | None = None) -> set[int]:
    """
    Remove every vertex of degree at most one in the subgraph induced by
    `alive` (all vertices by default) and return the survivors.
    """
    if alive is None:
        alive = set(range(g.n))
    return {
        v for v in alive if sum(1 for w in g.neighbors(v) if w in alive) > 1
    }


def _path_order(g: Graph, vertices: set[int]) -> tuple[int, ...] | None:
    """
    Order `vertices` along the path they induce, or return None if the
    induced subgraph is not a path. Assumes the induced subgraph is a subtree.
    """
    inner_degree = {v: sum(1 for w in g.neighbors(v) if w in vertices) for v in vertices}
    if any(d > 2 for d in inner_degree.values()):
        return None
    endpoints = sorted(v for v, d in inner_degree.items() if d <= 1)
    start = endpoints[0]
    order = [start]
    previous = -1
    current = start
    while True:
        step = [w for w in g.neighbors(current) if w in vertices and w != previous]
        if not step:
            break
        previous, current = current, step[0]
        order.append(current)
    return tuple(order)


def _collect_descendants(
    g: Graph, backbone: tuple[int, ...]
) -> dict[int, tuple[Child, ...]]:
    on_backbone = set(backbone)
    result: dict[int, tuple[Child, ...]] = {}
    for b in backbone:
        result[b] = tuple(
            Child(
                vertex=c,
                grandchildren=tuple(w for w in g.neighbors(c) if w != b),
            )
            for c in g.neighbors(b)
            if c not in on_backbone
        )
    return result


def classify_tree(g: Graph) -> TreeClass:
    """
    Classify a graph as caterpillar, lobster, other tree or not a tree.

    Leaf deletion is applied once (caterpillar) and, failing that, twice
    (lobster). A caterpillar is always reported as such. Trees whose first
    leaf deletion is empty (K_1, K_2) get the lowest id as their backbone.

    Args:
        g (Graph): Any graph.

    Returns:
        TreeClass: The most specific class with its backbone and descendants.
    """
    if not is_tree(g):
        return TreeClass(kind=TreeKind.NOT_TREE)
    first = leaf_deletion(g)
    if not first:
        backbone: tuple[int, ...] | None = (0,)
    else:
        backbone = _path_order(g, first)
    if backbone is not None:
        logger.debug(f"Caterpillar with backbone of length {len(backbone)}")
        return TreeClass(
            kind=TreeKind.CATERPILLAR,
            backbone=backbone,
            descendants=_collect_descendants(g, backbone),
        )
    second = leaf_deletion(g, first)
    backbone = _path_order(g, second)
    if backbone is not None:
        logger.debug(f"Lobster with backbone of length {len(backbone)}")
        return TreeClass(
            kind=TreeKind.LOBSTER,
            backbone=backbone,
            descendants=_collect_descendants(g, backbone),
        )
    return TreeClass(kind=TreeKind.OTHER_TREE)


def backbone_descendants(g: Graph, tc: TreeClass) -> dict[int, tuple[Child, ...]]:
    """
    Children and grandchildren of every backbone vertex.

    Raises:
        ContractViolationError: If `tc` carries no backbone.
    """
    if not tc.has_backbone:
        msg = f"Descendants are only defined for caterpillars and lobsters, not {tc.kind}"
        raise ContractViolationError(msg)
    return _collect_descendants(g, tc.backbone)
