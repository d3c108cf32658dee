# conftest.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

"""Fixtures for testing."""

# type: ignore
from collections.abc import Callable
from pathlib import Path

import factory
import pytest

from tests.factories.trees import build_caterpillar, build_lobster
from unit_disk_trees.graph import Graph, parse_graph

DATA_DIR = Path(__file__).parent / "tests" / "data"


@pytest.fixture(autouse=True)
def seeded_factories():
    factory.random.reseed_random("unit-disk-trees")


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def load_graph() -> Callable[[str], Graph]:
    def _load(name: str) -> Graph:
        return parse_graph((DATA_DIR / name).read_text())

    return _load


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def path5() -> Graph:
    return Graph.from_edges(5, [(i, i + 1) for i in range(4)])


@pytest.fixture
def star6() -> Graph:
    return build_caterpillar([6])


@pytest.fixture
def full_degree4_caterpillar() -> Graph:
    return build_caterpillar([4, 4, 4, 4, 4])


@pytest.fixture
def alternating_fives() -> Graph:
    return build_caterpillar([5, 4, 5, 4, 5, 4])


@pytest.fixture
def small_lobster(load_graph) -> Graph:
    return load_graph("lobster_small.txt")


@pytest.fixture
def squeezed_lobster() -> Graph:
    """A degree 6 child between two heavy siblings."""
    return build_lobster([[1], [2, 5, 2], [1]])
