from __future__ import annotations

import random
from decimal import Decimal
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultrametric import (
    UltrametricSpace,
    as_weight,
    diameter,
    format_weight,
    multispectrum,
    set_distance,
    spectrum,
    validate_ultrametric,
)
from ultrametric.errors import BadDiagonal, EmptySet, NotSymmetric, StrongTriangleViolated, ValidationError
from ultrametric.generate import space_from_nested

from .conftest import X, Z_NESTED, random_space
from .oracles import isosceles_everywhere


def equilateral(n: int, w) -> UltrametricSpace:
    return UltrametricSpace([f"p{i}" for i in range(n)], [[0 if i == j else w for j in range(n)] for i in range(n)])


class TestWeights:
    @pytest.mark.parametrize("raw, expected", [
        ("3", Fraction(3)),
        ("0.25", Fraction(1, 4)),
        (" 12.50 ", Fraction(25, 2)),
        ("1/3", Fraction(1, 3)),
        (7, Fraction(7)),
        (Decimal("0.1"), Fraction(1, 10)),
        (Fraction(2, 3), Fraction(2, 3)),
    ])
    def test_parse(self, raw, expected):
        assert as_weight(raw) == expected

    @pytest.mark.parametrize("raw", ["1.x", "-1", "1e3", "", "abc", "1/0"])
    def test_reject_text(self, raw):
        with pytest.raises(ValueError):
            as_weight(raw)

    def test_reject_float(self):
        with pytest.raises(TypeError):
            as_weight(0.1)

    @pytest.mark.parametrize("w, text", [
        (Fraction(3), "3"), (Fraction(5, 4), "1.25"), (Fraction(1, 20), "0.05"), (Fraction(1, 3), "1/3"),
    ])
    def test_format(self, w, text):
        assert format_weight(w) == text
        assert as_weight(text) == w

    @given(st.fractions(min_value=0, max_value=10**6))
    def test_format_roundtrip(self, w):
        assert as_weight(format_weight(w)) == w


class TestValidate:
    def test_one_point(self):
        space = validate_ultrametric(["a"], [[0]])
        assert space.n == 1
        assert spectrum(space) == (0,)

    def test_z15_is_valid(self, z15):
        assert z15.n == 15
        # the shipped file agrees with the nested tree it was written from
        assert z15 == space_from_nested(Z_NESTED)

    def test_strong_triangle_violation(self):
        with pytest.raises(StrongTriangleViolated) as info:
            validate_ultrametric(["a", "b", "c"], [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
        assert (info.value.i, info.value.j, info.value.k) == (0, 2, 1)
        assert "d(a,c)" in str(info.value)

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetric) as info:
            validate_ultrametric(["a", "b"], [[0, 1], [2, 0]])
        assert (info.value.i, info.value.j) == (0, 1)

    def test_bad_diagonal(self):
        with pytest.raises(BadDiagonal) as info:
            validate_ultrametric(["a", "b"], [[0, 1], [1, 5]])
        assert (info.value.i, info.value.j) == (1, 1)

    def test_zero_off_diagonal(self):
        with pytest.raises(BadDiagonal) as info:
            validate_ultrametric(["a", "b", "c"], [[0, 0, 1], [0, 0, 1], [1, 1, 0]])
        assert (info.value.i, info.value.j) == (0, 1)

    @pytest.mark.parametrize("labels, matrix", [
        ([], []),
        (["a", "a"], [[0, 1], [1, 0]]),
        (["a", "b"], [[0, 1]]),
    ])
    def test_structural_errors(self, labels, matrix):
        with pytest.raises(ValidationError):
            validate_ultrametric(labels, matrix)

    def test_negative_weight(self):
        with pytest.raises(ValueError):
            validate_ultrametric(["a", "b"], [[0, -1], [-1, 0]])

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, seed, rnd):
        space = random_space(random.Random(seed), 1, 9)
        perm = list(range(space.n))
        rnd.shuffle(perm)
        again = validate_ultrametric(
            [space.labels[i] for i in perm],
            [[space.d(i, j) for j in perm] for i in perm],
        )
        assert spectrum(again) == spectrum(space)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**32))
    def test_metric_invariants(self, seed):
        space = random_space(random.Random(seed), 1, 10)
        assert len(spectrum(space)) <= space.n
        assert max(spectrum(space)) == diameter(space, range(space.n))
        assert isosceles_everywhere(space)
        assert sum(multispectrum(space).values()) == space.n * (space.n - 1) // 2

    def test_ranks_are_read_only(self, z15):
        with pytest.raises(ValueError):
            z15.ranks[0, 1] = 5


class TestSpectra:
    def test_z15_spectrum(self, z15):
        assert spectrum(z15) == tuple(Fraction(k) for k in range(10))

    def test_equilateral(self):
        space = equilateral(3, 5)
        assert spectrum(space) == (0, 5)
        assert multispectrum(space) == {5: 3}

    def test_two_points(self):
        space = UltrametricSpace(["a", "b"], [[0, 7], [7, 0]])
        assert multispectrum(space) == {7: 1}

    def test_z15_multispectrum_by_counting(self, z15):
        counts: dict = {}
        for i, j in combinations(range(15), 2):
            counts[z15.d(i, j)] = counts.get(z15.d(i, j), 0) + 1
        assert multispectrum(z15) == counts
        # cross pairs under the root: 6*3 + 6*6 + 3*6
        assert multispectrum(z15)[9] == 72


class TestSetDistances:
    def test_same_singleton(self, z15):
        assert set_distance(z15, X(1), X(1)) == 0

    def test_z15_examples(self, z15):
        assert set_distance(z15, X(1), X(4)) == 4
        assert diameter(z15, X(10, 11, 12, 13, 14, 15)) == 8
        assert diameter(z15, X(7)) == 0

    def test_labels_accepted(self, z15):
        assert set_distance(z15, ["x1"], ["x4"]) == 4

    def test_empty(self, z15):
        with pytest.raises(EmptySet):
            set_distance(z15, [], X(1))
        with pytest.raises(EmptySet):
            diameter(z15, [])

    def test_random_against_scan(self):
        rng = random.Random(7)
        for _ in range(50):
            space = random_space(rng, 8, 8)
            a = rng.sample(range(8), rng.randint(1, 8))
            b = rng.sample(range(8), rng.randint(1, 8))
            d = space.dist
            assert set_distance(space, a, b) == min(d[x][y] for x in a for y in b)
            assert diameter(space, a) == max(d[x][y] for x in a for y in a)

    def test_subspace(self, z15):
        sub = z15.subspace(X(1, 4, 9))
        assert sub.labels == ("x1", "x4", "x9")
        assert np.array_equal(sub.ranks, [[0, 1, 2], [1, 0, 2], [2, 2, 0]])
