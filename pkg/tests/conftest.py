from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from ultrametric import build_representing_tree, load_space
from ultrametric.generate import GeneratorSpec, generate_space

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
Z15_PATH = FIXTURES / "z15.um"

# Representing tree of the 15-point space Z: (label, children), leaves are point names.
Z_NESTED = (9, [
    (4, [(1, ["x1", "x2", "x3"]), "x4", (2, ["x5", "x6"])]),
    (5, [(3, ["x7", "x8"]), "x9"]),
    (8, [(7, ["x10", "x11", "x12"]), "x13", (6, ["x14", "x15"])]),
])
# consecutive weights of the minimum spanning path x1, x2, ..., x15
REFERENCE_PATH_WEIGHTS = (1, 1, 4, 4, 2, 9, 3, 5, 9, 7, 7, 8, 8, 6)


def X(*nums: int) -> frozenset[int]:
    """Indices of points x<num> of Z (x1 is index 0)."""
    return frozenset(k - 1 for k in nums)


@pytest.fixture(scope="session")
def z15():
    return load_space(Z15_PATH)


@pytest.fixture(scope="session")
def z15_tree(z15):
    return build_representing_tree(z15)


def random_spec(rng: random.Random, n_min: int = 1, n_max: int = 10) -> GeneratorSpec:
    """A GeneratorSpec with varied size, branching and label pool (some fractional)."""
    n = rng.randint(n_min, n_max)
    branching = rng.randint(2, 4)
    k_min = 1
    while branching**k_min < n:
        k_min += 1
    k = rng.randint(k_min, max(k_min, n - 1))
    pool: set[Fraction] = set()
    while len(pool) < k:
        pool.add(Fraction(rng.randint(1, 4 * n + 4), rng.choice([1, 1, 1, 2, 3, 4])))
    return GeneratorSpec(n=n, label_pool=tuple(pool), branching=branching, seed=rng.getrandbits(64))


def random_space(rng: random.Random, n_min: int = 1, n_max: int = 10):
    return generate_space(random_spec(rng, n_min, n_max))


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
