"""Hausdorff distance between subsets of a finite ultrametric space.

The distance is the largest diameter among the balls that separate the two
sets (``bxy``).  ``hausdorff_oracle`` is the plain max-min definition and
``hausdorff_via_path`` reads the same balls off a minimum spanning path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .core import UltrametricSpace
from .errors import EmptySet, EqualSets, InternalError, NotMinimal
from .msp import SpanningPath, ball_windows, verify_min_spanning_path, window_parts
from .tree import Ball, RepresentingTree


def _sets(space: UltrametricSpace, a: Iterable, b: Iterable) -> tuple[frozenset[int], frozenset[int]]:
    sa, sb = space.point_set(a), space.point_set(b)
    if not sa or not sb:
        raise EmptySet("both point sets must be nonempty")
    return sa, sb


def meets_both(ball: frozenset[int], a: frozenset[int], b: frozenset[int]) -> bool:
    """The ball holds a point of one set missing from the other, and a point of that other set."""
    return bool((ball & (a - b)) and (ball & b)) or bool((ball & (b - a)) and (ball & a))


def has_separated_part(parts: Iterable[frozenset[int]], a: frozenset[int], b: frozenset[int]) -> bool:
    """Some part holds points of exactly one of the two sets."""
    for part in parts:
        only_a = bool(part & (a - b)) and not (part & b)
        only_b = bool(part & (b - a)) and not (part & a)
        if only_a != only_b:
            return True
    return False


def _separating(tree: RepresentingTree, sa: frozenset[int], sb: frozenset[int]) -> list[Ball]:
    nodes = tree.nodes
    out = []
    for v in nodes:
        if not v.children or not meets_both(v.ball, sa, sb):
            continue
        if has_separated_part((nodes[c].ball for c in v.children), sa, sb):
            out.append(Ball(v.ball, v.label))
    return out


def bxy(space: UltrametricSpace, tree: RepresentingTree, a: Iterable, b: Iterable) -> list[Ball]:
    """Balls of the tree that separate ``a`` from ``b``, in node order."""
    sa, sb = _sets(space, a, b)
    if sa == sb:
        raise EqualSets("the separating ball family is only defined for different sets")
    return _separating(tree, sa, sb)


def hausdorff(space: UltrametricSpace, tree: RepresentingTree, a: Iterable, b: Iterable) -> Fraction:
    sa, sb = _sets(space, a, b)
    if sa == sb:
        return Fraction(0)
    family = _separating(tree, sa, sb)
    if not family:
        raise InternalError("no separating ball for two different sets")
    return max(ball.diameter for ball in family)


def hausdorff_oracle(space: UltrametricSpace, a: Iterable, b: Iterable) -> Fraction:
    """max over both directions of the farthest point-to-set distance."""
    sa, sb = _sets(space, a, b)
    r = space.rank_rows
    forward = max(min(r[x][y] for y in sb) for x in sa)
    backward = max(min(r[x][y] for x in sa) for y in sb)
    return space.weight_of_rank(max(forward, backward))


@lru_cache(maxsize=64)
def _path_windows(space: UltrametricSpace, path: SpanningPath):
    """Verified non-singleton ball windows of a path as (ball, parts, diameter)."""
    if not verify_min_spanning_path(space, path):
        raise NotMinimal("path is not a minimum spanning path")
    order = path.order
    out = []
    for start, stop in ball_windows(path):
        if start == stop:
            continue
        ball = frozenset(order[start : stop + 1])
        parts = tuple(frozenset(order[lo : hi + 1]) for lo, hi in window_parts(path, start, stop))
        out.append((ball, parts, max(path.spectrum[start:stop])))
    return tuple(out)


def hausdorff_via_path(space: UltrametricSpace, path: SpanningPath, a: Iterable, b: Iterable) -> Fraction:
    sa, sb = _sets(space, a, b)
    windows = _path_windows(space, path)
    if sa == sb:
        return Fraction(0)
    best = None
    for ball, parts, diam in windows:
        if meets_both(ball, sa, sb) and has_separated_part(parts, sa, sb):
            best = diam if best is None else max(best, diam)
    if best is None:
        raise InternalError("no separating ball for two different sets")
    return best
