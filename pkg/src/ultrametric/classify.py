"""Special classes of finite ultrametric spaces.

Every class is decided on the representing tree.  The path-spectrum tests
are exposed next to them so callers can cross-check a given minimum
spanning path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass
from typing import Sequence

from .core import UltrametricSpace, spectrum
from .msp import SpanningPath, msp_greedy, msp_tree_guided
from .tree import (
    RepresentingTree,
    build_representing_tree,
    is_complete_multipartite,
    level_graph,
)


@dataclass(frozen=True)
class ClassReport:
    strictly_binary: bool
    injective_labeling: bool
    in_class_U: bool
    in_class_R: bool
    all_msts_are_paths: bool

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def is_strictly_binary(tree: RepresentingTree) -> bool:
    return all(len(v.children) == 2 for v in tree.internal_nodes())


def path_criterion_strictly_binary(spec: Sequence) -> bool:
    """Every pair of equal weights has a strictly larger weight between them."""
    s = list(spec)
    for i in range(len(s)):
        bigger_seen = False
        for j in range(i + 1, len(s)):
            if s[j] == s[i] and not bigger_seen:
                return False
            if s[j] > s[i]:
                bigger_seen = True
    return True


def is_injective_labeling(tree: RepresentingTree) -> bool:
    labels = [v.label for v in tree.internal_nodes()]
    return len(labels) == len(set(labels))


def injective_by_ballean_count(space: UltrametricSpace, tree: RepresentingTree) -> bool:
    """|Sp(X)| == |B_X| - |X| + 1."""
    return len(spectrum(space)) == len(tree.nodes) - space.n + 1


def injective_by_level_graphs(space: UltrametricSpace) -> bool:
    """Every nonzero level graph, isolated vertices dropped, is complete multipartite."""
    return all(is_complete_multipartite(level_graph(space, t)) for t in spectrum(space)[1:])


def path_criterion_injective(spec: Sequence) -> bool:
    """No weight between two equal weights exceeds them."""
    s = list(spec)
    for i in range(len(s)):
        bigger_seen = False
        for j in range(i + 1, len(s)):
            if s[j] == s[i] and bigger_seen:
                return False
            if s[j] > s[i]:
                bigger_seen = True
    return True


def path_criterion_distinct(spec: Sequence) -> bool:
    s = list(spec)
    return len(s) == len(set(s))


def in_class_U(space: UltrametricSpace) -> bool:
    """Extremal for the Gomory-Hu bound: as many distinct distances as points."""
    return len(spectrum(space)) == space.n


def in_class_U_by_tree(tree: RepresentingTree) -> bool:
    return is_strictly_binary(tree) and is_injective_labeling(tree)


def in_class_R(space: UltrametricSpace, tree: RepresentingTree | None = None) -> bool:
    """Strictly binary tree with a single internal node on every level but the last."""
    if tree is None:
        tree = build_representing_tree(space)
    if not is_strictly_binary(tree):
        return False
    per_level = Counter(v.level for v in tree.internal_nodes())
    return all(per_level[lvl] == 1 for lvl in range(tree.height))


def is_strictly_monotone(spec: Sequence) -> bool:
    s = list(spec)
    pairs = list(zip(s, s[1:]))
    return all(a < b for a, b in pairs) or all(a > b for a, b in pairs)


def monotone_path_witness(space: UltrametricSpace, tree: RepresentingTree | None = None) -> SpanningPath | None:
    """A minimum spanning path with strictly monotone spectrum, if one is found.

    Tries the greedy path from the deepest leaf first, then greedy and
    tree-guided paths from every start point.
    """
    if tree is None:
        tree = build_representing_tree(space)
    deepest = max(tree.leaves(), key=lambda v: (v.level, -min(v.ball)))
    first = msp_greedy(space, min(deepest.ball))
    if is_strictly_monotone(first.spectrum):
        return first
    for start in range(space.n):
        for path in (msp_greedy(space, start), msp_tree_guided(space, tree, start)):
            if is_strictly_monotone(path.spectrum):
                return path
    return None


def tree_shape(tree: RepresentingTree) -> str:
    """Label-free, order-free canonical string of the tree's rooted shape."""
    codes: dict[int, str] = {}
    for v in reversed(tree.nodes):  # children always have larger ids than parents
        codes[v.id] = "(" + "".join(sorted(codes[c] for c in v.children)) + ")"
    return codes[tree.root]


def shape_code(nested) -> str:
    """Canonical string for a shape written as nested lists; ``[]`` is a leaf."""
    return "(" + "".join(sorted(shape_code(c) for c in nested)) + ")"


LEAF: list = []
PATH_ONLY_SHAPES = {
    "T1": shape_code([[LEAF, LEAF], [LEAF, LEAF]]),
    "T2": shape_code([[LEAF, LEAF], LEAF]),
    "T3": shape_code([LEAF, LEAF]),
    "T4": shape_code([LEAF, LEAF, LEAF]),
    "T5": shape_code(LEAF),
}


def all_msts_are_paths(tree: RepresentingTree) -> bool:
    """True iff every minimum spanning tree of the space is a path."""
    return tree_shape(tree) in PATH_ONLY_SHAPES.values()


def classify(space: UltrametricSpace, tree: RepresentingTree | None = None) -> ClassReport:
    if tree is None:
        tree = build_representing_tree(space)
    binary = is_strictly_binary(tree)
    injective = is_injective_labeling(tree)
    return ClassReport(
        strictly_binary=binary,
        injective_labeling=injective,
        in_class_U=binary and injective,
        in_class_R=in_class_R(space, tree),
        all_msts_are_paths=all_msts_are_paths(tree),
    )
