"""Diametrical partitions, the representing tree and the ballean."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from scipy.cluster.hierarchy import DisjointSet

from .core import UltrametricSpace, as_weight, spectrum
from .errors import EmptyGraph, NotInSpectrum, SamePoint, TooSmall


@dataclass(frozen=True)
class DiametricalPartition:
    """Parts of the complete multipartite diametrical graph of a point set."""

    parts: tuple[frozenset[int], ...]
    diameter: Fraction


@dataclass(frozen=True)
class Ball:
    points: frozenset[int]
    diameter: Fraction


@dataclass(frozen=True)
class TreeNode:
    id: int
    ball: frozenset[int]
    label: Fraction
    children: tuple[int, ...]
    parent: int | None
    level: int

    @property
    def is_leaf(self) -> bool:
        return not self.children


class RepresentingTree:
    """Rooted tree whose nodes are the balls of a space, labelled by diameter.

    Node ids follow construction order: a parent always precedes its
    children, and siblings are ordered by their smallest point index.  The
    root has id 0.
    """

    def __init__(self, space: UltrametricSpace, nodes: Iterable[TreeNode]):
        self.space = space
        self.nodes: tuple[TreeNode, ...] = tuple(nodes)
        self.root = 0
        leaf_of = [0] * space.n
        for node in self.nodes:
            if node.is_leaf:
                (p,) = node.ball
                leaf_of[p] = node.id
        self.leaf_of: tuple[int, ...] = tuple(leaf_of)

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, node_id: int) -> TreeNode:
        return self.nodes[node_id]

    def internal_nodes(self) -> list[TreeNode]:
        return [v for v in self.nodes if not v.is_leaf]

    def leaves(self) -> list[TreeNode]:
        return [v for v in self.nodes if v.is_leaf]

    def ancestors(self, node_id: int) -> Iterator[TreeNode]:
        """The node itself, then its parent, up to the root."""
        cur: int | None = node_id
        while cur is not None:
            node = self.nodes[cur]
            yield node
            cur = node.parent

    def path_between(self, a: int, b: int) -> list[TreeNode]:
        """Nodes on the tree path from node ``a`` to node ``b`` (both included)."""
        up_a = list(self.ancestors(a))
        ids_a = {v.id: k for k, v in enumerate(up_a)}
        up_b = []
        for v in self.ancestors(b):
            if v.id in ids_a:
                return up_a[: ids_a[v.id] + 1] + up_b[::-1]
            up_b.append(v)
        raise AssertionError("nodes do not share the root")

    def lca(self, a: int, b: int) -> TreeNode:
        seen = {v.id for v in self.ancestors(a)}
        for v in self.ancestors(b):
            if v.id in seen:
                return v
        raise AssertionError("nodes do not share the root")

    @property
    def height(self) -> int:
        return max(v.level for v in self.nodes)

    def __repr__(self) -> str:
        return f"RepresentingTree(nodes={len(self.nodes)}, internal={len(self.internal_nodes())})"


def diametrical_partition(space: UltrametricSpace, members: Iterable) -> DiametricalPartition:
    """Split a point set into the parts of its diametrical graph.

    Two points share a part exactly when their distance is below the
    diameter of the set.
    """
    pts = sorted(space.point_set(members))
    if len(pts) < 2:
        raise TooSmall("a diametrical partition needs at least two points")
    ranks = space.ranks
    top = max(int(ranks[u, v]) for u, v in combinations(pts, 2))
    classes = DisjointSet(pts)
    for u, v in combinations(pts, 2):
        if ranks[u, v] < top:
            classes.merge(u, v)
    parts = sorted((frozenset(s) for s in classes.subsets()), key=min)
    return DiametricalPartition(tuple(parts), space.weight_of_rank(top))


def build_representing_tree(space: UltrametricSpace) -> RepresentingTree:
    built: list[dict] = []
    work: deque[tuple[frozenset[int], int | None, int]] = deque([(frozenset(range(space.n)), None, 0)])
    while work:
        ball, parent, level = work.popleft()
        node_id = len(built)
        if parent is not None:
            built[parent]["children"].append(node_id)
        if len(ball) == 1:
            built.append(dict(ball=ball, label=Fraction(0), children=[], parent=parent, level=level))
            continue
        part = diametrical_partition(space, ball)
        built.append(dict(ball=ball, label=part.diameter, children=[], parent=parent, level=level))
        for sub in part.parts:
            work.append((sub, node_id, level + 1))
    nodes = [
        TreeNode(k, b["ball"], b["label"], tuple(b["children"]), b["parent"], b["level"])
        for k, b in enumerate(built)
    ]
    return RepresentingTree(space, nodes)


def ballean(tree: RepresentingTree) -> list[Ball]:
    """All closed balls of the space, one per tree node, in node order."""
    return [Ball(v.ball, v.label) for v in tree.nodes]


def tree_distance(tree: RepresentingTree, i: int, j: int) -> Fraction:
    """Largest internal label on the tree path joining leaves ``{i}`` and ``{j}``."""
    if i == j:
        raise SamePoint(f"tree_distance needs two different points, got {i} twice")
    path = tree.path_between(tree.leaf_of[i], tree.leaf_of[j])
    return max(v.label for v in path[1:-1])


@dataclass(frozen=True)
class LevelGraph:
    """Pairs at distance exactly ``t``, restricted to non-isolated vertices."""

    t: Fraction
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def level_graph(space: UltrametricSpace, t) -> LevelGraph:
    t = as_weight(t)
    if t == 0 or t not in spectrum(space):
        raise NotInSpectrum(f"{t} is not a nonzero spectrum value")
    edges = frozenset(
        (u, v) for u, v in combinations(range(space.n), 2) if space.d(u, v) == t
    )
    verts = tuple(sorted({p for e in edges for p in e}))
    return LevelGraph(t, verts, edges)


def multipartite_parts(graph: LevelGraph) -> tuple[frozenset[int], ...] | None:
    """Parts of ``graph`` if it is complete multipartite, else ``None``."""
    if not graph.vertices or not graph.edges:
        raise EmptyGraph("complete multipartite test needs a graph with an edge")
    comp = DisjointSet(graph.vertices)
    for u, v in combinations(graph.vertices, 2):
        if not graph.adjacent(u, v):
            comp.merge(u, v)
    parts = sorted((frozenset(s) for s in comp.subsets()), key=min)
    for part in parts:
        for u, v in combinations(sorted(part), 2):
            if graph.adjacent(u, v):
                return None
    return tuple(parts)


def is_complete_multipartite(graph: LevelGraph) -> bool:
    return multipartite_parts(graph) is not None
