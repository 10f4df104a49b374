"""Seeded instance generators: complete 2-colored 3-uniform hypergraphs.

All models color the complete host K_n^(3).  Colors are drawn in colex
order of the triples, one counter per triple, so instances are reproducible
from (model, n, seed) alone.
"""

from __future__ import annotations

from itertools import combinations

from .core import Color, Coloring, Hypergraph3, colex_index
from .rng import CounterRng


def uniform_instance(n: int, p: float, seed: int) -> Coloring:
    """Each triple red independently with probability p (draw i = triple i)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    host = Hypergraph3.complete(n)
    rng = CounterRng(seed)
    red = [t for t in host.edges if rng.unit(colex_index(t)) < p]
    return Coloring(host, red)


def monochromatic_instance(n: int, color: Color) -> Coloring:
    host = Hypergraph3.complete(n)
    red = host.edges if color is Color.RED else ()
    return Coloring(host, red)


def planted_partition_instance(n: int, sizes) -> Coloring:
    """Triples inside any planted class are red, all crossing triples blue.

    Classes are the consecutive id blocks of the given sizes; ids beyond
    sum(sizes) belong to no class.
    """
    sizes = list(sizes)
    if any(s < 0 for s in sizes) or sum(sizes) > n:
        raise ValueError("class sizes must be nonnegative and fit in n")
    cls = [-1] * n
    start = 0
    for ci, s in enumerate(sizes):
        for v in range(start, start + s):
            cls[v] = ci
        start += s
    host = Hypergraph3.complete(n)
    red = [
        (a, b, c)
        for a, b, c in combinations(range(n), 3)
        if cls[a] >= 0 and cls[a] == cls[b] == cls[c]
    ]
    return Coloring(host, red)
