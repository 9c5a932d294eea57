"""Exact finite ultrametric spaces.

Distances are :class:`fractions.Fraction` values.  Every algorithm in the
package only *compares* distances, so a space also keeps an integer matrix of
spectrum ranks (``ranks[i, j]`` is the position of ``d(i, j)`` in the sorted
spectrum).  Comparisons on ranks are exact and cheap.
"""

from __future__ import annotations

import re
from math import lcm
from collections import Counter
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadDiagonal,
    EmptySet,
    NotSymmetric,
    StrongTriangleViolated,
    ValidationError,
)

Weight = Fraction
PointSet = frozenset  # frozenset[int] of point indices

_WEIGHT_RE = re.compile(r"^\s*(\d+)(?:\.(\d+))?\s*$")
_RATIO_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def as_weight(value) -> Fraction:
    """Convert ``value`` to an exact nonnegative weight.

    Accepts ints, Fractions, Decimals and strings such as ``"3"``, ``"0.25"``
    or ``"1/3"``.  Floats are refused because they are not exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, Fraction):
        w = value
    elif isinstance(value, int):
        w = Fraction(value)
    elif isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"weight must be finite, got {value}")
        w = Fraction(value)
    elif isinstance(value, str):
        m = _WEIGHT_RE.match(value)
        if m:
            w = Fraction(value.strip())
        else:
            m = _RATIO_RE.match(value)
            if not m or int(m.group(2)) == 0:
                raise ValueError(f"not a decimal weight: {value!r}")
            w = Fraction(int(m.group(1)), int(m.group(2)))
    elif isinstance(value, float):
        raise TypeError("float weights are inexact; pass a decimal string or Fraction")
    else:
        raise TypeError(f"cannot interpret {type(value).__name__} as a weight")
    if w < 0:
        raise ValueError(f"weight must be nonnegative, got {w}")
    return w


def format_weight(w: Fraction) -> str:
    """Shortest exact text form: ``"3"``, ``"1.25"`` or ``"1/3"``."""
    if w.denominator == 1:
        return str(w.numerator)
    den = w.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{w.numerator}/{w.denominator}"
    places = max(twos, fives)
    scaled = w * 10**places
    digits = str(scaled.numerator).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


class UltrametricSpace:
    """A nonempty finite set of labelled points with an exact ultrametric.

    The constructor always checks the three axioms; there is no unchecked
    path into this type.  Point identity is the index, labels are names.
    """

    __slots__ = ("_labels", "_dist", "_ranks", "_rank_rows", "_spectrum", "_index", "_hash")

    def __init__(self, labels: Sequence[str], matrix: Sequence[Sequence]):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n == 0:
            raise ValidationError("an ultrametric space needs at least one point")
        if len(set(labels)) != n:
            raise ValidationError("point labels must be distinct")
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValidationError(f"distance matrix must be {n}x{n}")
        dist = tuple(tuple(as_weight(x) for x in row) for row in matrix)

        for i in range(n):
            if dist[i][i] != 0:
                raise BadDiagonal(i, i)
        for i in range(n):
            for j in range(i + 1, n):
                if dist[i][j] != dist[j][i]:
                    raise NotSymmetric(i, j)
                if dist[i][j] == 0:
                    raise BadDiagonal(i, j)

        spectrum, ranks = _rank(dist)
        _check_strong_triangle(ranks, labels)
        ranks.setflags(write=False)

        self._labels = labels
        self._dist = dist
        self._ranks = ranks
        self._rank_rows = tuple(tuple(row) for row in ranks.tolist())
        self._spectrum = spectrum
        self._index = {name: i for i, name in enumerate(labels)}
        self._hash = None

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def dist(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._dist

    @property
    def ranks(self) -> np.ndarray:
        """Read-only matrix of spectrum ranks, order-isomorphic to ``dist``."""
        return self._ranks

    @property
    def rank_rows(self) -> tuple[tuple[int, ...], ...]:
        """``ranks`` as nested tuples of plain ints, for fast scalar lookups."""
        return self._rank_rows

    @property
    def n(self) -> int:
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def d(self, i: int, j: int) -> Fraction:
        return self._dist[i][j]

    def weight_of_rank(self, r: int) -> Fraction:
        return self._spectrum[r]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown point label {label!r}") from None

    def point_set(self, members: Iterable) -> frozenset[int]:
        """Resolve labels or indices to a frozenset of point indices."""
        n = len(self._labels)
        out = set()
        for m in members:
            if isinstance(m, str):
                out.add(self.index(m))
            else:
                i = int(m)
                if not 0 <= i < n:
                    raise IndexError(f"point index {i} out of range for n={n}")
                out.add(i)
        return frozenset(out)

    def subspace(self, members: Iterable) -> "UltrametricSpace":
        idx = sorted(self.point_set(members))
        if not idx:
            raise EmptySet("subspace needs at least one point")
        return UltrametricSpace(
            [self._labels[i] for i in idx],
            [[self._dist[i][j] for j in idx] for i in idx],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, UltrametricSpace):
            return NotImplemented
        return self._labels == other._labels and self._dist == other._dist

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._labels, self._dist))
        return self._hash

    def __repr__(self) -> str:
        return f"UltrametricSpace(n={self.n}, spectrum={[format_weight(w) for w in self._spectrum]})"


def _rank(dist: tuple[tuple[Fraction, ...], ...]) -> tuple[tuple[Fraction, ...], np.ndarray]:
    """Sorted distinct weights and the matrix of their ranks."""
    # Scaling to a common denominator turns the weights into integers, which
    # hash and compare far faster than Fractions.
    scale = lcm(*{w.denominator for row in dist for w in row})
    scaled = [[w.numerator * (scale // w.denominator) for w in row] for row in dist]
    values = sorted({v for row in scaled for v in row})
    rank_of = {v: r for r, v in enumerate(values)}
    ranks = np.array([[rank_of[v] for v in row] for row in scaled], dtype=np.int64)
    return tuple(Fraction(v, scale) for v in values), ranks


def _check_strong_triangle(ranks: np.ndarray, labels: tuple[str, ...]) -> None:
    # Row by row to keep memory at O(n^2); reports the lexicographically first (i, j, k).
    for i in range(ranks.shape[0]):
        row = ranks[i]
        bound = np.maximum(row[None, :], ranks.T)  # [j, k] -> max(d(i,k), d(k,j))
        bad = np.argwhere(row[:, None] > bound)
        if bad.size:
            j, k = (int(x) for x in bad[0])
            raise StrongTriangleViolated(i, j, k, labels)


def validate_ultrametric(labels: Sequence[str], matrix: Sequence[Sequence]) -> UltrametricSpace:
    """Check the ultrametric axioms and return the space, or raise the first violation."""
    return UltrametricSpace(labels, matrix)


def spectrum(space: UltrametricSpace) -> tuple[Fraction, ...]:
    """Sorted distinct distance values, including 0."""
    return space._spectrum


def multispectrum(space: UltrametricSpace) -> dict[Fraction, int]:
    """Number of unordered point pairs at each nonzero distance."""
    iu = np.triu_indices(space.n, k=1)
    counts = Counter(space.ranks[iu].tolist())
    return {space.weight_of_rank(r): counts[r] for r in sorted(counts)}


def _nonempty(space: UltrametricSpace, members: Iterable, name: str) -> list[int]:
    idx = sorted(space.point_set(members))
    if not idx:
        raise EmptySet(f"{name} must be nonempty")
    return idx


def set_distance(space: UltrametricSpace, a: Iterable, b: Iterable) -> Fraction:
    """min d(x, y) over x in ``a`` and y in ``b``."""
    ia = _nonempty(space, a, "A")
    ib = _nonempty(space, b, "B")
    return space.weight_of_rank(int(space.ranks[np.ix_(ia, ib)].min()))


def diameter(space: UltrametricSpace, a: Iterable) -> Fraction:
    ia = _nonempty(space, a, "A")
    return space.weight_of_rank(int(space.ranks[np.ix_(ia, ia)].max()))
