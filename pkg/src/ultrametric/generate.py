"""Building spaces from labelled trees: random, enumerated, or written out by hand.

A rooted tree whose internal labels strictly decrease towards the leaves
defines an ultrametric: the distance between two leaves is the label of
their lowest common ancestor.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Iterator, Sequence

from .core import UltrametricSpace, as_weight
from .errors import InvalidSpec

Shape = tuple  # nested tuples; () is a leaf


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    label_pool: tuple[Fraction, ...] = field(default=())
    branching: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidSpec("n must be at least 1")
        if self.branching < 2:
            raise InvalidSpec("branching must be at least 2")
        try:
            pool = tuple(sorted(as_weight(w) for w in self.label_pool))
        except (TypeError, ValueError) as exc:
            raise InvalidSpec(str(exc)) from None
        if not pool:
            pool = tuple(Fraction(k) for k in range(1, max(self.n, 2)))
        if pool[0] <= 0 or len(set(pool)) != len(pool):
            raise InvalidSpec("label pool must hold distinct positive weights")
        if self.n > self.branching ** len(pool):
            raise InvalidSpec(
                f"{len(pool)} labels with branching {self.branching} cannot separate {self.n} points"
            )
        object.__setattr__(self, "label_pool", pool)


def _random_shape(m: int, budget: int, branching: int, rng: random.Random) -> Shape:
    """Shape with ``m`` leaves, at most ``budget`` internal levels, nodes of 2..branching children."""
    if m == 1:
        return ()
    cap = branching ** (budget - 1)
    choices = [k for k in range(2, min(branching, m) + 1) if k * cap >= m]
    k = rng.choice(choices)
    sizes = [1] * k
    for _ in range(m - k):
        open_parts = [i for i, s in enumerate(sizes) if s < cap]
        sizes[rng.choice(open_parts)] += 1
    return tuple(_random_shape(s, budget - 1, branching, rng) for s in sizes)


def _height(shape: Shape) -> int:
    """Internal nodes on the longest downward chain (0 for a leaf)."""
    return 0 if not shape else 1 + max(_height(c) for c in shape)


def _label_shape(shape: Shape, pool: Sequence[Fraction], rng: random.Random, below: int):
    if not shape:
        return None
    h = _height(shape)
    idx = rng.randrange(h - 1, below)
    return (pool[idx], [_label_shape(c, pool, rng, idx) for c in shape])


def _attach_points(labelled, names: Iterator[str]):
    if labelled is None:
        return next(names)
    label, kids = labelled
    return (label, [_attach_points(c, names) for c in kids])


def generate_space(spec: GeneratorSpec) -> UltrametricSpace:
    """Draw a random labelled tree under ``spec`` and return the space it defines."""
    rng = random.Random(spec.seed)
    pool = spec.label_pool
    shape = _random_shape(spec.n, len(pool), spec.branching, rng)
    labelled = _label_shape(shape, pool, rng, len(pool))
    names = [f"x{i}" for i in range(1, spec.n + 1)]
    rng.shuffle(names)
    leaf_names, matrix = _nested_matrix(_attach_points(labelled, iter(names)))
    # present points as x1..xn in index order
    order = sorted(range(spec.n), key=lambda i: int(leaf_names[i][1:]))
    return UltrametricSpace(
        [leaf_names[i] for i in order],
        [[matrix[i][j] for j in order] for i in order],
    )


def _nested_matrix(tree) -> tuple[list[str], list[list[Fraction]]]:
    names: list[str] = []
    pending: list[tuple[list[list[int]], Fraction]] = []

    def walk(node) -> list[int]:
        if isinstance(node, str):
            names.append(node)
            return [len(names) - 1]
        label, kids = node
        if len(kids) < 2:
            raise InvalidSpec("internal nodes need at least two children")
        groups = [walk(c) for c in kids]
        pending.append((groups, as_weight(label)))
        return sum(groups, [])

    walk(tree)
    n = len(names)
    zero = Fraction(0)
    matrix = [[zero] * n for _ in range(n)]
    for groups, label in pending:
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                for i, j in product(groups[a], groups[b]):
                    matrix[i][j] = matrix[j][i] = label
    return names, matrix


def space_from_nested(tree) -> UltrametricSpace:
    """Space from a nested ``(label, [children])`` tree whose leaves are point names.

    Points are indexed in left-to-right leaf order.
    """
    return UltrametricSpace(*_nested_matrix(tree))


@lru_cache(maxsize=None)
def _shapes(m: int) -> tuple[Shape, ...]:
    if m == 1:
        return ((),)
    out = set()
    for sizes in _partitions(m, m - 1):
        if len(sizes) < 2:
            continue
        per_size = {}
        for s in set(sizes):
            per_size[s] = list(combinations_with_replacement(_shapes(s), sizes.count(s)))
        for combo in product(*per_size.values()):
            kids = tuple(sorted((c for group in combo for c in group), key=_code))
            out.add(kids)
    return tuple(sorted(out, key=_code))


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _code(shape: Shape) -> str:
    return "(" + "".join(sorted(_code(c) for c in shape)) + ")"


def enumerate_shapes(n: int) -> list[Shape]:
    """Every rooted tree shape with ``n`` leaves and no single-child nodes, up to isomorphism."""
    if n < 1:
        raise InvalidSpec("n must be at least 1")
    return list(_shapes(n))


def space_from_shape(shape: Shape, labeling: str = "distinct") -> UltrametricSpace:
    """Space whose representing tree has the given shape.

    ``labeling="distinct"`` numbers internal nodes in post-order, so every
    internal label differs.  ``labeling="height"`` labels each internal node
    by its height, so nodes at equal height share a label.
    """
    counter = iter(range(1, 10**9))
    names = iter(f"x{i}" for i in range(1, 10**9))

    def build(node):
        if not node:
            return next(names)
        kids = [build(c) for c in node]
        label = next(counter) if labeling == "distinct" else _height(node)
        return (label, kids)

    if labeling not in ("distinct", "height"):
        raise ValueError(f"unknown labeling {labeling!r}")
    return space_from_nested(build(shape))
