from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ultrametric import ballean, build_representing_tree, spectrum, validate_ultrametric
from ultrametric.errors import InvalidSpec
from ultrametric.generate import (
    GeneratorSpec,
    enumerate_shapes,
    generate_space,
    space_from_nested,
    space_from_shape,
)
from ultrametric.classify import shape_code, tree_shape

from .conftest import random_spec
from .oracles import closed_balls


def test_seed_42_is_stable():
    first = generate_space(GeneratorSpec(n=8, seed=42))
    assert first == generate_space(GeneratorSpec(n=8, seed=42))
    assert first.labels == tuple(f"x{k}" for k in range(1, 9))


def test_seeds_differ():
    spaces = {generate_space(GeneratorSpec(n=8, seed=s)) for s in range(20)}
    assert len(spaces) > 10


def test_one_point():
    space = generate_space(GeneratorSpec(n=1))
    assert space.n == 1 and spectrum(space) == (0,)


def test_default_pool():
    spec = GeneratorSpec(n=5)
    assert spec.label_pool == tuple(Fraction(k) for k in range(1, 5))
    assert GeneratorSpec(n=1).label_pool == (1,)


@pytest.mark.parametrize("kwargs", [
    {"n": 0},
    {"n": 3, "branching": 1},
    {"n": 3, "label_pool": (1, 1)},
    {"n": 3, "label_pool": (0, 1)},
    {"n": 3, "label_pool": ("x",)},
    {"n": 3, "label_pool": (0.5,)},
    {"n": 9, "label_pool": (1, 2), "branching": 2},
])
def test_invalid_spec(kwargs):
    with pytest.raises(InvalidSpec):
        GeneratorSpec(**kwargs)


def test_tight_budget():
    # 8 points with 3 labels and branching 2 forces the full binary tree
    space = generate_space(GeneratorSpec(n=8, label_pool=(1, 2, 3), branching=2, seed=5))
    tree = build_representing_tree(space)
    assert tree_shape(tree) == shape_code([[[[], []], [[], []]], [[[], []], [[], []]]])


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_generated_spaces_are_sound(seed):
    spec = random_spec(random.Random(seed), 1, 12)
    space = generate_space(spec)
    validate_ultrametric(space.labels, space.dist)
    assert space.n == spec.n
    assert set(spectrum(space)) - {0} <= set(spec.label_pool)
    tree = build_representing_tree(space)
    assert max(len(v.children) for v in tree.nodes) <= spec.branching


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_ballean_round_trip(seed):
    space = generate_space(random_spec(random.Random(seed), 1, 10))
    tree = build_representing_tree(space)
    found = {(b.points, b.diameter) for b in ballean(tree)}
    assert found == closed_balls(space)


def test_nested_builder():
    space = space_from_nested((3, [(1, ["a", "b"]), "c"]))
    assert space.labels == ("a", "b", "c")
    assert [space.d(0, 1), space.d(0, 2), space.d(1, 2)] == [1, 3, 3]
    with pytest.raises(InvalidSpec):
        space_from_nested((1, ["a"]))


def test_shape_counts():
    # series-reduced rooted trees by number of leaves
    assert [len(enumerate_shapes(n)) for n in range(1, 9)] == [1, 1, 2, 5, 12, 33, 90, 261]


@pytest.mark.parametrize("n", range(1, 8))
def test_shapes_realised(n):
    codes = set()
    for shape in enumerate_shapes(n):
        for labeling in ("distinct", "height"):
            space = space_from_shape(shape, labeling)
            assert space.n == n
            code = tree_shape(build_representing_tree(space))
            codes.add(code)
            assert code == shape_code(shape)
    assert len(codes) == len(enumerate_shapes(n))


def test_height_labeling_shares_labels():
    shape = (((), ()), ((), ()))
    assert spectrum(space_from_shape(shape, "height")) == (0, 1, 2)
    assert len(spectrum(space_from_shape(shape, "distinct"))) == 4
    with pytest.raises(ValueError):
        space_from_shape(shape, "odd")
