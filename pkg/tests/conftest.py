"""Shared fixtures and hypothesis defaults."""

from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings

from tripack.graph import Graph, build_graph, complete_graph

settings.register_profile(
    "suite",
    max_examples=80,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return build_graph(n, edges)


@pytest.fixture
def k6() -> Graph:
    return complete_graph(6)


@pytest.fixture
def c5() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
