"""Shared test helpers: small random hypergraphs with independent generators."""

import random
from itertools import combinations

import pytest

from rcover.core import Coloring, Hypergraph3


def random_hypergraph(n: int, p: float, rng: random.Random) -> Hypergraph3:
    """Plain random host: each triple present independently with prob p."""
    edges = [t for t in combinations(range(n), 3) if rng.random() < p]
    return Hypergraph3(n, edges)


def random_coloring(h: Hypergraph3, rng: random.Random) -> Coloring:
    red = [t for t in h.edges if rng.random() < 0.5]
    return Coloring(h, red)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
