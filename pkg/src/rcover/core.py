"""3-uniform hypergraphs: canonical triples, pair links, pseudo-path connectivity.

Vertices are integers in [0, n).  An edge is a strictly increasing triple
(a, b, c).  Triples are totally ordered by their colex index
C(c,3) + C(b,2) + C(a,1), which is also the bit position used by the dense
edge bitmap and the ``h3bits`` file format.

Set-valued queries are backed by integer bitmasks: the link of a pair is a
mask over vertex ids, the dense edge store is a mask over colex indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from math import comb

from .errors import InvalidPairError, NotAnEdgeError

Triple = tuple[int, int, int]
Pair = tuple[int, int]

# Dense bitmap storage kicks in at this edge density (fraction of C(n,3)).
DENSE_THRESHOLD = 0.25


class Color(str, Enum):
    RED = "R"
    BLUE = "B"

    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


def canon_triple(a: int, b: int, c: int) -> Triple:
    """Sort three distinct vertex ids into canonical ascending order."""
    if a == b or a == c or b == c:
        raise ValueError(f"triple needs three distinct vertices, got {(a, b, c)}")
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
    if a > b:
        a, b = b, a
    return (a, b, c)


def colex_index(t: Triple) -> int:
    """Position of a canonical triple in colex order: C(c,3) + C(b,2) + C(a,1)."""
    a, b, c = t
    return comb(c, 3) + comb(b, 2) + a


def colex_inverse(index: int) -> Triple:
    """Inverse of colex_index; independent of any ambient vertex count."""
    if index < 0:
        raise ValueError("colex index must be nonnegative")
    c = 2
    while comb(c + 1, 3) <= index:
        c += 1
    rem = index - comb(c, 3)
    b = 1
    while comb(b + 1, 2) <= rem:
        b += 1
    a = rem - comb(b, 2)
    return (a, b, c)


def triple_mask(t: Triple) -> int:
    a, b, c = t
    return (1 << a) | (1 << b) | (1 << c)


def pair_key(x: int, y: int) -> Pair:
    """Unordered pair as a (min, max) key."""
    if x == y:
        raise InvalidPairError(f"pair needs two distinct vertices, got ({x}, {y})")
    return (x, y) if x < y else (y, x)


def tight_adjacent(e: Triple, f: Triple) -> bool:
    """True iff the two triples share exactly two vertices."""
    shared = len(set(e) & set(f))
    return shared == 2


def mask_bits(mask: int):
    """Iterate set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Hypergraph3:
    """Immutable 3-uniform hypergraph on a vertex subset of [0, n).

    ``vertices`` defaults to all of range(n); induced subhypergraphs keep the
    original vertex labels and simply restrict the vertex set.  Edges are
    stored either as a dense bitmap over colex indices (near-complete hosts)
    or as a frozenset of triples, switching at DENSE_THRESHOLD density.
    Pair links are built lazily and cached; instances are safe to share
    across threads once constructed.
    """

    __slots__ = (
        "n",
        "vertices",
        "_edges_sorted",
        "_edge_set",
        "_edge_bits",
        "_dense",
        "_pair_links",
        "_vertex_mask",
    )

    def __init__(self, n: int, edges, vertices=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        if vertices is None:
            self.vertices = frozenset(range(n))
        else:
            self.vertices = frozenset(vertices)
            if any(v < 0 or v >= n for v in self.vertices):
                raise ValueError("vertices must lie in [0, n)")
        vmask = 0
        for v in self.vertices:
            vmask |= 1 << v
        self._vertex_mask = vmask

        edges = sorted(set(edges), key=colex_index)
        for t in edges:
            if len(t) != 3 or not (t[0] < t[1] < t[2]):
                raise ValueError(f"edge {t} is not a canonical triple")
            if triple_mask(t) & ~vmask:
                raise ValueError(f"edge {t} uses a vertex outside the vertex set")
        self._edges_sorted = tuple(edges)

        total = comb(n, 3)
        self._dense = total > 0 and len(edges) >= DENSE_THRESHOLD * total
        if self._dense:
            bits = 0
            for t in edges:
                bits |= 1 << colex_index(t)
            self._edge_bits = bits
            self._edge_set = None
        else:
            self._edge_bits = None
            self._edge_set = frozenset(edges)
        self._pair_links = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def complete(cls, n: int) -> "Hypergraph3":
        return cls(n, combinations(range(n), 3))

    def induced(self, vertex_subset) -> "Hypergraph3":
        """Subhypergraph on a vertex subset, keeping original labels."""
        keep = frozenset(vertex_subset)
        if not keep <= self.vertices:
            raise ValueError("subset must be contained in the vertex set")
        kmask = 0
        for v in keep:
            kmask |= 1 << v
        edges = [t for t in self._edges_sorted if triple_mask(t) & ~kmask == 0]
        return Hypergraph3(self.n, edges, vertices=keep)

    def restricted_to_edges(self, edges) -> "Hypergraph3":
        """Same vertex set, edge set replaced (used for color classes)."""
        return Hypergraph3(self.n, edges, vertices=self.vertices)

    # -- basic queries -----------------------------------------------------

    @property
    def t(self) -> int:
        """Number of vertices (the proof-side t)."""
        return len(self.vertices)

    @property
    def edges(self) -> tuple[Triple, ...]:
        """Edges in colex order."""
        return self._edges_sorted

    @property
    def edge_count(self) -> int:
        return len(self._edges_sorted)

    @property
    def vertex_mask(self) -> int:
        return self._vertex_mask

    @property
    def dense_storage(self) -> bool:
        return self._dense

    def has_edge(self, t: Triple) -> bool:
        if self._dense:
            return bool(self._edge_bits >> colex_index(t) & 1)
        return t in self._edge_set

    def _links(self) -> dict[Pair, int]:
        links = self._pair_links
        if links is None:
            links = {}
            for a, b, c in self._edges_sorted:
                ab = (a, b)
                prev = links.get(ab, 0)
                links[ab] = prev | (1 << c)
                ac = (a, c)
                prev = links.get(ac, 0)
                links[ac] = prev | (1 << b)
                bc = (b, c)
                prev = links.get(bc, 0)
                links[bc] = prev | (1 << a)
            self._pair_links = links
        return links

    def link_mask(self, x: int, y: int) -> int:
        """Bitmask of the link N(x, y); 0 when the pair is inactive."""
        return self._links().get(pair_key(x, y), 0)

    def link(self, x: int, y: int) -> set[int]:
        """N(x, y) = { z : {x,y,z} is an edge }."""
        return set(mask_bits(self.link_mask(x, y)))

    def shadow(self) -> set[Pair]:
        """All pairs contained in at least one edge."""
        return set(self._links().keys())

    def active_pairs(self) -> set[Pair]:
        """A pair is active iff its link is nonempty; identical to shadow()."""
        return self.shadow()

    def neighbor_mask(self, x: int) -> int:
        """Bitmask of N(x) = { y : xy is in the shadow }."""
        out = 0
        for (a, b), m in self._links().items():
            if a == x:
                out |= 1 << b
            elif b == x:
                out |= 1 << a
            elif (m >> x) & 1:
                out |= (1 << a) | (1 << b)
        return out

    def support(self) -> frozenset[int]:
        """Vertices contained in at least one edge."""
        out = 0
        for t in self._edges_sorted:
            out |= triple_mask(t)
        return frozenset(mask_bits(out))

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, t={self.t}, edges={self.edge_count})"


# -- connectivity ----------------------------------------------------------


def connected_components(h: Hypergraph3) -> tuple[tuple[Triple, ...], ...]:
    """Partition of the edge set into pseudo-path components.

    Two edges are equivalent iff a sequence of edges joins them with every
    consecutive pair sharing exactly two vertices.  Components are returned
    with edges in colex order, sorted by their first edge.
    """
    edges = h.edges
    m = len(edges)
    parent = list(range(m))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            if ri > rj:
                ri, rj = rj, ri
            parent[rj] = ri

    buckets: dict[Pair, int] = {}
    for idx, (a, b, c) in enumerate(edges):
        for p in ((a, b), (a, c), (b, c)):
            first = buckets.get(p)
            if first is None:
                buckets[p] = idx
            else:
                union(first, idx)

    groups: dict[int, list[Triple]] = {}
    for idx, t in enumerate(edges):
        groups.setdefault(find(idx), []).append(t)
    comps = [tuple(g) for g in groups.values()]
    comps.sort(key=lambda g: colex_index(g[0]))
    return tuple(comps)


@dataclass(frozen=True)
class PseudoPath:
    """Edge sequence with every consecutive pair sharing exactly 2 vertices.

    Edges may repeat; length is the number of edges.  A single edge is a
    valid pseudo-path of length 1.
    """

    edges: tuple[Triple, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    def is_valid(self) -> bool:
        if not self.edges:
            return False
        return all(
            tight_adjacent(self.edges[i], self.edges[i + 1])
            for i in range(len(self.edges) - 1)
        )


def _edge_neighbors(h: Hypergraph3, g: Triple) -> list[Triple]:
    """Edges sharing exactly two vertices with g, in colex order."""
    a, b, c = g
    out = []
    for (x, y), skip in (((a, b), c), ((a, c), b), ((b, c), a)):
        mask = h.link_mask(x, y) & ~(1 << skip)
        for z in mask_bits(mask):
            out.append(canon_triple(x, y, z))
    out.sort(key=colex_index)
    return out


def connecting_path(h: Hypergraph3, e: Triple, f: Triple) -> PseudoPath | None:
    """Shortest pseudo-path from e to f, or None if they are disconnected.

    Breadth-first search over tight adjacency; neighbors are scanned in
    colex order so tie-breaking is deterministic.  ``e == f`` yields the
    length-1 path consisting of the edge itself.
    """
    if not h.has_edge(e):
        raise NotAnEdgeError(f"{e} is not an edge of the host")
    if not h.has_edge(f):
        raise NotAnEdgeError(f"{f} is not an edge of the host")
    if e == f:
        return PseudoPath((e,))
    parents: dict[Triple, Triple] = {e: e}
    frontier = [e]
    while frontier:
        next_frontier = []
        for g in frontier:
            for nb in _edge_neighbors(h, g):
                if nb in parents:
                    continue
                parents[nb] = g
                if nb == f:
                    path = [nb]
                    while path[-1] != e:
                        path.append(parents[path[-1]])
                    path.reverse()
                    return PseudoPath(tuple(path))
                next_frontier.append(nb)
        frontier = next_frontier
    return None


# -- colorings -------------------------------------------------------------


class Coloring:
    """Total red/blue assignment on the edges of a host hypergraph."""

    __slots__ = ("host", "red", "blue", "_subs")

    def __init__(self, host: Hypergraph3, red_edges):
        self.host = host
        self.red = frozenset(red_edges)
        host_edges = frozenset(host.edges)
        if not self.red <= host_edges:
            raise ValueError("red edges must be edges of the host")
        self.blue = host_edges - self.red
        self._subs: dict[Color, Hypergraph3] = {}

    @classmethod
    def from_sequence(cls, host: Hypergraph3, colors) -> "Coloring":
        """Colors aligned with host.edges (colex order), values 'R'/'B'."""
        colors = list(colors)
        if len(colors) != host.edge_count:
            raise ValueError("color sequence length must match edge count")
        red = [t for t, c in zip(host.edges, colors) if Color(c) is Color.RED]
        return cls(host, red)

    def color_of(self, t: Triple) -> Color:
        if t in self.red:
            return Color.RED
        if t in self.blue:
            return Color.BLUE
        raise NotAnEdgeError(f"{t} is not an edge of the host")

    def is_red(self, t: Triple) -> bool:
        return t in self.red

    def edges_of(self, color: Color) -> frozenset[Triple]:
        return self.red if color is Color.RED else self.blue

    def subhypergraph(self, color: Color) -> Hypergraph3:
        """Host restricted to the edges of one color (cached)."""
        sub = self._subs.get(color)
        if sub is None:
            sub = self.host.restricted_to_edges(self.edges_of(color))
            self._subs[color] = sub
        return sub

    def color_sequence(self) -> list[str]:
        return [self.color_of(t).value for t in self.host.edges]

    def restrict(self, host: Hypergraph3) -> "Coloring":
        """Coloring induced on a subhypergraph of the current host."""
        return Coloring(host, [t for t in host.edges if t in self.red])

    def __repr__(self) -> str:
        return f"Coloring(red={len(self.red)}, blue={len(self.blue)})"
