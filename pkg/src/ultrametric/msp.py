"""Minimum spanning paths and trees of finite ultrametric spaces."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence, Union

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .core import UltrametricSpace
from .errors import NotMinimal, NotSpanning, SamePoint, TooLarge
from .tree import Ball, RepresentingTree

MAX_ENUMERATION_POINTS = 8


@dataclass(frozen=True)
class SpanningPath:
    """Points in path order with the weights of consecutive edges."""

    order: tuple[int, ...]
    spectrum: tuple[Fraction, ...]
    space: UltrametricSpace = field(compare=False, repr=False)

    @classmethod
    def from_order(cls, space: UltrametricSpace, order: Sequence[int]) -> "SpanningPath":
        order = tuple(int(p) for p in order)
        spec = tuple(space.d(a, b) for a, b in zip(order, order[1:]))
        return cls(order, spec, space)

    @property
    def total_weight(self) -> Fraction:
        return sum(self.spectrum, Fraction(0))

    def labels(self) -> list[str]:
        return [self.space.labels[p] for p in self.order]


@dataclass(frozen=True)
class SpanningTree:
    """Spanning tree as sorted ``(u, v, weight)`` triples with ``u < v``."""

    edges: tuple[tuple[int, int, Fraction], ...]
    n: int

    @property
    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v, _ in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_path(self) -> bool:
        return self.n == 1 or max(self.degrees()) <= 2


Structure = Union[SpanningPath, SpanningTree]


def weight_distribution(structure: Structure) -> dict[Fraction, int]:
    """How many edges of each weight the structure has."""
    if isinstance(structure, SpanningPath):
        weights = structure.spectrum
    else:
        weights = [w for _, _, w in structure.edges]
    counts = Counter(weights)
    return {w: counts[w] for w in sorted(counts)}


def msp_greedy(space: UltrametricSpace, start: int = 0) -> SpanningPath:
    """Nearest-unvisited-neighbour path from ``start``; ties go to the lowest index."""
    n = space.n
    if not 0 <= start < n:
        raise IndexError(f"start point {start} out of range for n={n}")
    ranks = space.ranks
    unvisited = np.ones(n, dtype=bool)
    unvisited[start] = False
    order = [start]
    sentinel = int(ranks.max()) + 1
    cur = start
    for _ in range(n - 1):
        row = np.where(unvisited, ranks[cur], sentinel)
        cur = int(np.argmin(row))
        unvisited[cur] = False
        order.append(cur)
    return SpanningPath.from_order(space, order)


def msp_tree_guided(space: UltrametricSpace, tree: RepresentingTree, start_leaf: int = 0) -> SpanningPath:
    """Walk the representing tree: from the current point climb to the
    deepest ball that still has an unvisited point, and step to the
    lowest-index such point."""
    if tree.space is not space and tree.space != space:
        raise ValueError("tree was not built from this space")
    n = space.n
    if not 0 <= start_leaf < n:
        raise IndexError(f"start point {start_leaf} out of range for n={n}")
    remaining = [len(v.ball) for v in tree.nodes]
    visited: set[int] = set()

    def visit(p: int) -> None:
        visited.add(p)
        for v in tree.ancestors(tree.leaf_of[p]):
            remaining[v.id] -= 1

    order = [start_leaf]
    visit(start_leaf)
    cur = start_leaf
    while len(order) < n:
        node = next(v for v in tree.ancestors(tree.leaf_of[cur]) if remaining[v.id] > 0)
        cur = min(node.ball - visited)
        order.append(cur)
        visit(cur)
    return SpanningPath.from_order(space, order)


def eq4_distribution(tree: RepresentingTree) -> dict[Fraction, int]:
    """Edge-weight counts shared by every minimum spanning tree.

    Each internal node contributes ``len(children) - 1`` edges of its label.
    """
    counts: dict[Fraction, int] = defaultdict(int)
    for v in tree.internal_nodes():
        counts[v.label] += len(v.children) - 1
    return {w: counts[w] for w in sorted(counts)}


def kruskal_mst(space: UltrametricSpace) -> SpanningTree:
    n = space.n
    ranks = space.ranks
    iu, ju = np.triu_indices(n, k=1)
    # lexsort keys go last-to-first: weight, then smaller index, then larger index
    order = np.lexsort((ju, iu, ranks[iu, ju]))
    forest = DisjointSet(range(n))
    chosen = []
    for k in order:
        u, v = int(iu[k]), int(ju[k])
        if forest.merge(u, v):
            chosen.append((u, v, space.d(u, v)))
            if len(chosen) == n - 1:
                break
    return SpanningTree(tuple(sorted(chosen)), n)


def max_edge_distance(structure: Structure, i: int, j: int) -> Fraction:
    """Heaviest edge on the unique path between points ``i`` and ``j``."""
    if i == j:
        raise SamePoint(f"max_edge_distance needs two different points, got {i} twice")
    if isinstance(structure, SpanningPath):
        pos = {p: k for k, p in enumerate(structure.order)}
        if i not in pos or j not in pos:
            raise NotSpanning(f"point {i if i not in pos else j} is not on the path")
        a, b = sorted((pos[i], pos[j]))
        return max(structure.spectrum[a:b])

    adj: dict[int, list[tuple[int, Fraction]]] = defaultdict(list)
    for u, v, w in structure.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    if i not in adj or j not in adj:
        raise NotSpanning(f"point {i if i not in adj else j} is not in the tree")
    # DFS from i carrying the running maximum
    stack = [(i, -1, Fraction(0))]
    while stack:
        node, parent, best = stack.pop()
        if node == j:
            return best
        for nxt, w in adj[node]:
            if nxt != parent:
                stack.append((nxt, node, max(best, w)))
    raise NotSpanning(f"points {i} and {j} are not connected")


def _check_spanning(space: UltrametricSpace, path: SpanningPath) -> None:
    if sorted(path.order) != list(range(space.n)):
        raise NotSpanning("path must visit every point exactly once")
    if len(path.spectrum) != space.n - 1 or any(
        w != space.d(a, b) for w, a, b in zip(path.spectrum, path.order, path.order[1:])
    ):
        raise ValueError("path spectrum does not match the space distances")


def verify_min_spanning_path(space: UltrametricSpace, path: SpanningPath) -> bool:
    """True iff the heaviest edge between any two points on the path is their distance."""
    _check_spanning(space, path)
    ranks = space.ranks
    order = path.order
    steps = [int(ranks[a, b]) for a, b in zip(order, order[1:])]
    for p in range(len(order)):
        running = -1
        for q in range(p + 1, len(order)):
            running = max(running, steps[q - 1])
            if running != ranks[order[p], order[q]]:
                return False
    return True


def ball_windows(path: SpanningPath) -> list[tuple[int, int]]:
    """Position ranges ``(start, stop)``, inclusive, of the balls along a minimum spanning path.

    A run of at least two consecutive points is a ball when every weight
    inside it is strictly smaller than the weights just outside it (a
    missing outside weight at either end of the path imposes nothing).
    Singletons are included.
    """
    s = path.spectrum
    n = len(path.order)
    out = [(p, p) for p in range(n)]
    for start in range(n - 1):
        left = s[start - 1] if start > 0 else None
        inner = None
        for stop in range(start + 1, n):
            w = s[stop - 1]
            inner = w if inner is None else max(inner, w)
            if left is not None and not inner < left:
                break
            right = s[stop] if stop < n - 1 else None
            if right is None or inner < right:
                out.append((start, stop))
    out.sort(key=lambda r: (r[0], -r[1]))
    return out


def window_parts(path: SpanningPath, start: int, stop: int) -> list[tuple[int, int]]:
    """Split a ball window at its heaviest edges; the pieces are its diametrical parts."""
    if start == stop:
        return [(start, stop)]
    inner = path.spectrum[start:stop]
    top = max(inner)
    parts = []
    lo = start
    for k, w in enumerate(inner, start=start):
        if w == top:
            parts.append((lo, k))
            lo = k + 1
    parts.append((lo, stop))
    return parts


def window_ball(path: SpanningPath, start: int, stop: int) -> Ball:
    pts = frozenset(path.order[start : stop + 1])
    diam = max(path.spectrum[start:stop]) if stop > start else Fraction(0)
    return Ball(pts, diam)


def balls_from_path(path: SpanningPath) -> list[Ball]:
    """Every closed ball of the space, read off a minimum spanning path."""
    if not verify_min_spanning_path(path.space, path):
        raise NotMinimal("path is not a minimum spanning path")
    return [window_ball(path, a, b) for a, b in ball_windows(path)]


@lru_cache(maxsize=None)
def _labeled_trees(n: int) -> np.ndarray:
    """Edge arrays of all n**(n-2) labelled trees on n vertices, by Prüfer decoding.

    Shape ``(count, n - 1, 2)``; each edge is stored as ``(small, large)``.
    """
    if n == 1:
        return np.zeros((1, 0, 2), dtype=np.int64)
    if n == 2:
        return np.array([[[0, 1]]], dtype=np.int64)
    count = n ** (n - 2)
    seqs = np.stack(np.unravel_index(np.arange(count), (n,) * (n - 2)), axis=1)
    rows = np.arange(count)
    degree = np.ones((count, n), dtype=np.int64)
    for col in seqs.T:
        np.add.at(degree, (rows, col), 1)
    edges = np.empty((count, n - 1, 2), dtype=np.int64)
    for t in range(n - 2):
        leaf = np.argmax(degree == 1, axis=1)
        nb = seqs[:, t]
        edges[:, t, 0] = leaf
        edges[:, t, 1] = nb
        degree[rows, leaf] -= 1
        degree[rows, nb] -= 1
    edges[:, n - 2] = np.nonzero(degree == 1)[1].reshape(count, 2)
    edges.sort(axis=2)
    edges.setflags(write=False)
    return edges


def _integer_weights(space: UltrametricSpace) -> np.ndarray:
    scale = lcm(*(w.denominator for row in space.dist for w in row))
    ints = [[int(w * scale) for w in row] for row in space.dist]
    biggest = max(max(r) for r in ints) * max(space.n - 1, 1)
    dtype = np.int64 if biggest < 2**62 else object
    return np.array(ints, dtype=dtype)


def enumerate_all_msts(space: UltrametricSpace) -> list[SpanningTree]:
    """All minimum-weight spanning trees, found by scoring every labelled tree.

    Independent of any ultrametric structure; meant as a test oracle for
    small spaces only.
    """
    n = space.n
    if n > MAX_ENUMERATION_POINTS:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {MAX_ENUMERATION_POINTS}")
    trees = _labeled_trees(n)
    if n == 1:
        return [SpanningTree((), 1)]
    weights = _integer_weights(space)
    totals = weights[trees[:, :, 0], trees[:, :, 1]].sum(axis=1)
    best = totals.min()
    out = []
    for k in np.flatnonzero(totals == best):
        edges = tuple(sorted((int(u), int(v), space.d(int(u), int(v))) for u, v in trees[k]))
        out.append(SpanningTree(edges, n))
    return out
