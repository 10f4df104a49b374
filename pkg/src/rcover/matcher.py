"""Two disjoint monochromatic connected matchings in a dense 2-colored host.

The pipeline mirrors a constructive covering argument for almost-complete
3-uniform hypergraphs:

1. ``clean``: iteratively delete weak pairs and isolated vertices until every
   active pair of the surviving subhypergraph K has a link of size at least
   (1 - delta) * |V(K)| with delta = 10 * gamma^(1/6).
2. ``partition_vertices``: every vertex picks the monochromatic component it
   sees most of (red wins ties); vertex sides R/B, the dominant ("major")
   component per color, and the aligned vertex cores follow.
3. ``local_search_matching``: grow two disjoint matchings inside the major
   components with three exchange moves, each strictly increasing the number
   of covered vertices: greedy edge addition, one-for-two swaps through good
   edges, and two-for-three swaps through a fresh linking edge.
4. Residual branch (only useful when delta is small enough that the residual
   thresholds bite): extract the opposite-colored component sitting inside
   the leftover core (``residual_component``), perfectly match it
   (``perfect_matching_dense``), and dissolve the displaced matching into
   major-colored triples (``dissolve_matching``).

``cover`` wires the stages together, attempts both color orientations of the
residual branch, and returns the best result that passes ``verify_cover``.

Threshold hypotheses from the underlying counting argument (|R| >= 6*delta*t
and friends) are evaluated and logged in the trace but never gate the
constructive pipeline: at desk scale they are almost always vacuous, while
the constructions remain perfectly checkable.  Structural claims that only
hold under those hypotheses are likewise recorded, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import ceil, comb

from .core import (
    Color,
    Coloring,
    Hypergraph3,
    PseudoPath,
    Triple,
    canon_triple,
    colex_index,
    connected_components,
    connecting_path,
    mask_bits,
    pair_key,
    triple_mask,
)
from .errors import (
    BranchInapplicableError,
    CleanupExhaustedError,
    GoodEdgeUndefinedError,
    NotAnEdgeError,
    RcoverError,
)

# -- parameters --------------------------------------------------------------


@dataclass(frozen=True)
class Params:
    """Gamma-derived constants; thresholds are evaluated against a vertex count."""

    gamma: float
    delta: float
    coverage_bound: float
    eta_pm: float = 5.0 / 36.0

    @classmethod
    def from_gamma(cls, gamma: float) -> "Params":
        if not 0.0 < gamma < 1.0:
            raise ValueError("gamma must lie in (0, 1)")
        delta = 10.0 * gamma ** (1.0 / 6.0)
        return cls(gamma=gamma, delta=delta, coverage_bound=29.0 * delta)

    def thresholds(self, t: int) -> dict[str, float]:
        d = self.delta
        return {
            "six_delta_t": 6.0 * d * t,
            "two_delta_t": 2.0 * d * t,
            "eight_delta_t": 8.0 * d * t,
            "twelve_delta_t": 12.0 * d * t,
            "three_delta_t_plus_2": 3.0 * d * t + 2.0,
            "six_delta_t_dissolve": 6.0 * d * t,
        }

    def vacuous(self, t: int) -> bool:
        """True when some threshold reaches t, voiding the counting claims."""
        return not all(v < t for v in self.thresholds(t).values())


# -- cleanup -----------------------------------------------------------------


@dataclass(frozen=True)
class CleanReport:
    t_before: int
    t_after: int
    deleted: tuple[int, ...]
    rounds: int
    deactivated_pairs: int
    bound_held: bool  # |V(K)| >= (1 - delta) * |V(H)|


def clean(h: Hypergraph3, gamma: float) -> tuple[Hypergraph3, CleanReport]:
    """Delete weak pairs and isolated vertices until the link bound holds.

    Each round, against the current vertex count t: every active pair whose
    link is smaller than ceil((1 - delta) * t) loses all its edges, then
    vertices contained in no edge are dropped, then t is recomputed.  At the
    fixpoint every vertex sits in an active pair and every active pair has a
    link of size at least (1 - delta) * t.

    The size guarantee t_K >= (1 - delta) * t_H of the existential lemma is
    reported, not assumed: this loop is a constructive stand-in, so the
    report carries whether the bound happened to hold.

    Raises CleanupExhaustedError (with the report attached) if every vertex
    dies.
    """
    params = Params.from_gamma(gamma)
    delta = params.delta
    vertices = set(h.vertices)
    edges = set(h.edges)
    t0 = len(vertices)
    rounds = 0
    deactivated = 0

    while True:
        rounds += 1
        t = len(vertices)
        if t == 0:
            break
        threshold = ceil((1.0 - delta) * t)
        links: dict[tuple[int, int], int] = {}
        for a, b, c in edges:
            links[(a, b)] = links.get((a, b), 0) + 1
            links[(a, c)] = links.get((a, c), 0) + 1
            links[(b, c)] = links.get((b, c), 0) + 1
        bad = {p for p, size in links.items() if size < threshold}
        changed = False
        if bad:
            deactivated += len(bad)
            edges = {
                (a, b, c)
                for (a, b, c) in edges
                if (a, b) not in bad and (a, c) not in bad and (b, c) not in bad
            }
            changed = True
        support = set()
        for t3 in edges:
            support.update(t3)
        isolated = vertices - support
        if isolated:
            vertices = support
            changed = True
        if not changed:
            break

    deleted = tuple(sorted(h.vertices - vertices))
    report = CleanReport(
        t_before=t0,
        t_after=len(vertices),
        deleted=deleted,
        rounds=rounds,
        deactivated_pairs=deactivated,
        bound_held=len(vertices) >= (1.0 - delta) * t0,
    )
    if not vertices:
        raise CleanupExhaustedError("cleanup deleted every vertex", report=report)
    return Hypergraph3(h.n, edges, vertices=vertices), report


def check_clean_properties(k: Hypergraph3, gamma: float) -> tuple[bool, list[str]]:
    """Independent verifier of the two cleanup fixpoint properties."""
    delta = Params.from_gamma(gamma).delta
    problems = []
    in_pair = set()
    for pair in k.active_pairs():
        in_pair.update(pair)
        in_pair.update(k.link(*pair))
    for v in sorted(k.vertices - in_pair):
        problems.append(f"vertex {v} lies in no active pair")
    bound = (1.0 - delta) * k.t
    for x, y in sorted(k.active_pairs()):
        size = len(k.link(x, y))
        if size < bound:
            problems.append(f"active pair ({x},{y}) has link {size} < {bound:.3f}")
    return not problems, problems


# -- components and the vertex partition --------------------------------------


@dataclass(frozen=True)
class ComponentInfo:
    """One monochromatic component with its shadow and neighbor masks."""

    cid: str
    color: Color
    edges: tuple[Triple, ...]
    edge_set: frozenset[Triple]
    shadow: frozenset[tuple[int, int]]
    neighbor_masks: dict[int, int]
    vertex_mask: int

    @classmethod
    def build(cls, color: Color, edges: tuple[Triple, ...]) -> "ComponentInfo":
        shadow = set()
        masks: dict[int, int] = {}
        vmask = 0
        for a, b, c in edges:
            shadow.add((a, b))
            shadow.add((a, c))
            shadow.add((b, c))
            masks[a] = masks.get(a, 0) | (1 << b) | (1 << c)
            masks[b] = masks.get(b, 0) | (1 << a) | (1 << c)
            masks[c] = masks.get(c, 0) | (1 << a) | (1 << b)
            vmask |= (1 << a) | (1 << b) | (1 << c)
        cid = f"{color.value}:{colex_index(edges[0])}"
        return cls(
            cid=cid,
            color=color,
            edges=edges,
            edge_set=frozenset(edges),
            shadow=frozenset(shadow),
            neighbor_masks=masks,
            vertex_mask=vmask,
        )


@dataclass
class ColorPartition:
    """Vertex sides, chosen components, and per-color major components.

    ``red_side`` holds the vertices whose best-seen component is red (ties
    prefer red, then the component with the smaller first edge), and
    ``red_core`` the subset aligned with the most frequent red choice
    ``major_red``; symmetrically for blue.  ``hypotheses`` records whether
    the counting-argument side conditions held; they never gate anything.
    """

    red_side: tuple[int, ...]
    blue_side: tuple[int, ...]
    chosen: dict[int, str | None]
    major_red: str | None
    major_blue: str | None
    red_core: tuple[int, ...]
    blue_core: tuple[int, ...]
    components: dict[str, ComponentInfo] = field(default_factory=dict)
    hypotheses: dict[str, bool | None] = field(default_factory=dict)

    def major(self, color: Color) -> ComponentInfo | None:
        cid = self.major_red if color is Color.RED else self.major_blue
        return None if cid is None else self.components[cid]

    def core(self, color: Color) -> tuple[int, ...]:
        return self.red_core if color is Color.RED else self.blue_core


def partition_vertices(k: Hypergraph3, col: Coloring, params: Params) -> ColorPartition:
    """Assign every vertex its best monochromatic component; derive majors.

    For each vertex x the chosen component maximizes |N_C(x)| over all
    monochromatic components C, with ties broken red before blue and then by
    smaller component id.  The major component of a color is the most
    frequent choice on that side (ties to the smaller id); the core is the
    set of vertices aligned with it.
    """
    comps: list[ComponentInfo] = []
    for color in (Color.RED, Color.BLUE):
        sub = col.subhypergraph(color)
        for comp_edges in connected_components(sub):
            comps.append(ComponentInfo.build(color, comp_edges))

    chosen: dict[int, str | None] = {}
    red_side: list[int] = []
    blue_side: list[int] = []
    for x in sorted(k.vertices):
        best = None
        best_size = 0
        for info in comps:
            size = info.neighbor_masks.get(x, 0).bit_count()
            if size > best_size:
                best = info
                best_size = size
        if best is None:
            # possible only on uncleaned input: no incident edge at all
            chosen[x] = None
            red_side.append(x)
        else:
            chosen[x] = best.cid
            (red_side if best.color is Color.RED else blue_side).append(x)

    by_id = {info.cid: info for info in comps}

    def major_of(side: list[int], color: Color) -> str | None:
        counts: dict[str, int] = {}
        for x in side:
            cid = chosen[x]
            if cid is not None and by_id[cid].color is color:
                counts[cid] = counts.get(cid, 0) + 1
        if not counts:
            return None
        best_cid = None
        best_count = -1
        for info in comps:  # canonical order: red first, then first-edge colex
            cnt = counts.get(info.cid, 0)
            if cnt > best_count:
                best_cid = info.cid
                best_count = cnt
        return best_cid

    major_red = major_of(red_side, Color.RED)
    major_blue = major_of(blue_side, Color.BLUE)
    red_core = tuple(x for x in red_side if chosen[x] == major_red) if major_red else ()
    blue_core = tuple(x for x in blue_side if chosen[x] == major_blue) if major_blue else ()

    t = k.t
    th = params.thresholds(t)
    hypotheses = {
        "red_side_large": len(red_side) >= th["six_delta_t"],
        "blue_side_large": len(blue_side) >= th["six_delta_t"],
        "red_outliers_small": len(red_side) - len(red_core) <= th["two_delta_t"],
        "blue_outliers_small": len(blue_side) - len(blue_core) <= th["two_delta_t"],
    }
    return ColorPartition(
        red_side=tuple(red_side),
        blue_side=tuple(blue_side),
        chosen=chosen,
        major_red=major_red,
        major_blue=major_blue,
        red_core=red_core,
        blue_core=blue_core,
        components=by_id,
        hypotheses=hypotheses,
    )


def is_good_edge(k: Hypergraph3, col: Coloring, part: ColorPartition, e: Triple) -> bool:
    """One pair of e in the major red shadow, a different pair in the blue one."""
    if not k.has_edge(e):
        raise NotAnEdgeError(f"{e} is not an edge")
    red = part.major(Color.RED)
    blue = part.major(Color.BLUE)
    if red is None or blue is None:
        raise GoodEdgeUndefinedError("good edges need both major components")
    a, b, c = e
    pairs = ((a, b), (a, c), (b, c))
    in_red = [p in red.shadow for p in pairs]
    in_blue = [p in blue.shadow for p in pairs]
    return any(
        in_red[i] and in_blue[j] for i in range(3) for j in range(3) if i != j
    )


# -- connected matchings -------------------------------------------------------


@dataclass(frozen=True)
class ConnectedMatching:
    """Disjoint same-colored edges plus pseudo-path connectivity certificates.

    ``certificates[i]`` joins ``edges[i]`` to ``edges[i+1]`` (edges in colex
    order) inside the subhypergraph of the matching's color, so a valid
    certificate chain places all edges in one monochromatic component.
    Certificate paths may pass through vertices covered elsewhere; only
    ``edges`` count as covered.
    """

    color: Color
    edges: tuple[Triple, ...]
    component_id: str | None
    certificates: tuple[PseudoPath, ...]

    def vertex_set(self) -> frozenset[int]:
        out: set[int] = set()
        for e in self.edges:
            out.update(e)
        return frozenset(out)

    def covered(self) -> int:
        return 3 * len(self.edges)


def _middle_edge(h: Hypergraph3, e: Triple, f: Triple) -> Triple | None:
    """Deterministic edge sharing two vertices with each of e and f, if any.

    Scans the pairs of e in fixed order and takes each pair's smallest
    completion, then the smallest-colex candidate among those.
    """
    emask = triple_mask(e)
    fmask = triple_mask(f)
    best = None
    a, b, c = e
    for x, y in ((a, b), (a, c), (b, c)):
        pmask = (1 << x) | (1 << y)
        overlap = (pmask & fmask).bit_count()
        if overlap == 2:
            zmask = h.link_mask(x, y) & ~emask & ~fmask
        elif overlap == 1:
            zmask = h.link_mask(x, y) & fmask & ~pmask & ~emask
        else:
            continue
        if zmask:
            z = (zmask & -zmask).bit_length() - 1
            g = canon_triple(x, y, z)
            if best is None or colex_index(g) < colex_index(best):
                best = g
    return best


def _edge_neighbors_masked(h: Hypergraph3, g: Triple):
    a, b, c = g
    gmask = triple_mask(g)
    for x, y in ((a, b), (a, c), (b, c)):
        zmask = h.link_mask(x, y) & ~gmask
        for z in mask_bits(zmask):
            yield canon_triple(x, y, z)


def mono_connecting_path(h: Hypergraph3, e: Triple, f: Triple) -> PseudoPath | None:
    """Short pseudo-path from e to f, tuned for dense monochromatic hosts.

    Tries lengths 1..4 with direct link-mask constructions before falling
    back to the breadth-first search of ``connecting_path``.  Deterministic
    but not necessarily the BFS-shortest path.
    """
    if e == f:
        return PseudoPath((e,))
    if (triple_mask(e) & triple_mask(f)).bit_count() == 2:
        return PseudoPath((e, f))
    g = _middle_edge(h, e, f)
    if g is not None:
        return PseudoPath((e, g, f))
    for g1 in _edge_neighbors_masked(h, e):
        if g1 == f:
            continue
        g2 = _middle_edge(h, g1, f)
        if g2 is not None and g2 != e:
            return PseudoPath((e, g1, g2, f))
    return connecting_path(h, e, f)


def build_matching(
    col: Coloring,
    color: Color,
    edges,
    component_id: str | None,
) -> ConnectedMatching:
    """Sort, certify, and wrap a set of disjoint same-colored edges."""
    edges = tuple(sorted(edges, key=colex_index))
    if not edges:
        return ConnectedMatching(color, (), None, ())
    sub = col.subhypergraph(color)
    certs = []
    for i in range(len(edges) - 1):
        path = mono_connecting_path(sub, edges[i], edges[i + 1])
        if path is None:
            raise RcoverError(
                f"matching edges {edges[i]} and {edges[i + 1]} are not connected "
                f"in the {color.value} subhypergraph"
            )
        certs.append(path)
    return ConnectedMatching(color, edges, component_id, tuple(certs))


# -- local search ---------------------------------------------------------------


def local_search_matching(
    k: Hypergraph3,
    col: Coloring,
    part: ColorPartition,
    params: Params,
) -> tuple[ConnectedMatching, ConnectedMatching, list[dict]]:
    """Exchange-move local search for two disjoint major-component matchings.

    Moves, each strictly increasing the covered-vertex count by three, are
    tried in order and the first applicable one fires:

    * greedy-add: the smallest fully-uncovered edge of a major component;
    * one-for-two: drop one matching edge, add two disjoint good edges
      whose vertices are otherwise uncovered;
    * two-for-three: drop two edges of one matching, re-cover two of their
      vertex pairs with good edges through fresh vertices and join the two
      displaced vertices with a fresh linking edge anchored in the shadow of
      its color's major component.

    Good-edge moves are skipped (and noted) while either major component is
    absent.  Returns the two matchings plus the applied-move trace.
    """
    majors = {c: part.major(c) for c in (Color.RED, Color.BLUE)}
    matching: dict[Color, set[Triple]] = {Color.RED: set(), Color.BLUE: set()}
    covered = 0
    moves: list[dict] = []

    add_candidates: list[tuple[int, Triple, Color]] = []
    for color in (Color.RED, Color.BLUE):
        info = majors[color]
        if info is not None:
            add_candidates.extend((triple_mask(t), t, color) for t in info.edges)
    add_candidates.sort(key=lambda item: colex_index(item[1]))
    add_pos = 0

    red_major = majors[Color.RED]
    blue_major = majors[Color.BLUE]
    good_ready = red_major is not None and blue_major is not None

    def good(t: Triple) -> bool:
        a, b, c = t
        pairs = ((a, b), (a, c), (b, c))
        in_r = tuple(p in red_major.shadow for p in pairs)
        in_b = tuple(p in blue_major.shadow for p in pairs)
        return (
            (in_r[0] and (in_b[1] or in_b[2]))
            or (in_r[1] and (in_b[0] or in_b[2]))
            or (in_r[2] and (in_b[0] or in_b[1]))
        )

    def matched_home(t: Triple) -> Color:
        color = col.color_of(t)
        info = majors[color]
        if info is None or t not in info.edge_set:
            raise RcoverError(f"exchange produced {t} outside its major component")
        return color

    def try_greedy_add():
        nonlocal add_pos
        while add_pos < len(add_candidates):
            mask, t, color = add_candidates[add_pos]
            if mask & covered == 0:
                return ("greedy-add", (), (t,))
            add_pos += 1
        return None

    def good_edges_within(umask: int) -> list[Triple]:
        verts = list(mask_bits(umask))
        out = []
        if len(verts) <= 24:
            for t in combinations(verts, 3):
                if k.has_edge(t) and good(t):
                    out.append(t)
        else:
            for t in k.edges:
                if triple_mask(t) & ~umask == 0 and good(t):
                    out.append(t)
        out.sort(key=colex_index)
        return out

    def try_one_for_two():
        if not good_ready:
            return None
        uncov = k.vertex_mask & ~covered
        pool = sorted(matching[Color.RED] | matching[Color.BLUE], key=colex_index)
        for e in pool:
            umask = uncov | triple_mask(e)
            cands = good_edges_within(umask)
            for i, f1 in enumerate(cands):
                m1 = triple_mask(f1)
                for f2 in cands[i + 1 :]:
                    if m1 & triple_mask(f2) == 0:
                        return ("one-for-two", (e,), (f1, f2))
        return None

    def try_two_for_three():
        if not good_ready:
            return None
        uncov = k.vertex_mask & ~covered
        for mcolor in (Color.RED, Color.BLUE):
            pool = sorted(matching[mcolor], key=colex_index)
            for i1 in range(len(pool)):
                for i2 in range(i1 + 1, len(pool)):
                    e1, e2 = pool[i1], pool[i2]
                    for u1 in e1:
                        p1 = tuple(v for v in e1 if v != u1)
                        amask = k.link_mask(*p1) & uncov
                        for a in mask_bits(amask):
                            f1 = canon_triple(p1[0], p1[1], a)
                            if not good(f1):
                                continue
                            for u2 in e2:
                                p2 = tuple(v for v in e2 if v != u2)
                                bmask = k.link_mask(*p2) & uncov & ~(1 << a)
                                for b in mask_bits(bmask):
                                    f2 = canon_triple(p2[0], p2[1], b)
                                    if not good(f2):
                                        continue
                                    cmask = (
                                        k.link_mask(u1, u2)
                                        & uncov
                                        & ~(1 << a)
                                        & ~(1 << b)
                                    )
                                    for c in mask_bits(cmask):
                                        f3 = canon_triple(u1, u2, c)
                                        info = majors[col.color_of(f3)]
                                        if info is None:
                                            continue
                                        x, y, z = f3
                                        if (
                                            (x, y) in info.shadow
                                            or (x, z) in info.shadow
                                            or (y, z) in info.shadow
                                        ):
                                            return (
                                                "two-for-three",
                                                (e1, e2),
                                                (f1, f2, f3),
                                            )
        return None

    while True:
        move = try_greedy_add()
        if move is None:
            move = try_one_for_two()
        if move is None:
            move = try_two_for_three()
        if move is None:
            break
        kind, removed, added = move
        before = covered.bit_count()
        for t in removed:
            matching[col.color_of(t)].discard(t)
        for t in added:
            matching[matched_home(t)].add(t)
        covered = 0
        for color in (Color.RED, Color.BLUE):
            for t in matching[color]:
                covered |= triple_mask(t)
        after = covered.bit_count()
        if after <= before:
            raise RcoverError(f"move {kind} did not increase coverage")
        if removed:
            add_pos = 0
        moves.append(
            {
                "stage": "move",
                "detail": {
                    "kind": kind,
                    "removed": [list(t) for t in removed],
                    "added": [list(t) for t in added],
                    "covered": after,
                },
            }
        )

    if not good_ready:
        moves.append(
            {
                "stage": "move-note",
                "detail": {
                    "note": "good-edge moves skipped: a major component is absent",
                    "major_red": part.major_red,
                    "major_blue": part.major_blue,
                },
            }
        )

    red_cm = build_matching(
        col, Color.RED, matching[Color.RED], part.major_red if matching[Color.RED] else None
    )
    blue_cm = build_matching(
        col, Color.BLUE, matching[Color.BLUE], part.major_blue if matching[Color.BLUE] else None
    )
    return red_cm, blue_cm, moves


def structural_claims(
    part: ColorPartition,
    red_m: ConnectedMatching,
    blue_m: ConnectedMatching,
    params: Params,
    t: int,
) -> dict:
    """Post-search claims from the exchange argument, evaluated and labeled.

    For every edge of a matching, the number of its vertices lying in the
    opposite core should be 0 once the exchange moves are exhausted (first
    <= 1, then != 1).  Only meaningful when the thresholds are non-vacuous;
    the vacuous flag says whether the claims were in force.
    """
    vacuous = params.vacuous(t)
    out = {"vacuous": vacuous}
    for m in (blue_m, red_m):
        # the argument bounds |edge ∩ blue core| for blue matching edges (and
        # symmetrically): once exchanges are exhausted the overlap must be 0
        core = set(part.blue_core) if m.color is Color.BLUE else set(part.red_core)
        overlaps = [len(set(e) & core) for e in m.edges]
        out[f"{m.color.value}_max_core_overlap"] = max(overlaps, default=0)
        out[f"{m.color.value}_claim_at_most_one"] = all(o <= 1 for o in overlaps)
        out[f"{m.color.value}_claim_not_exactly_one"] = all(o != 1 for o in overlaps)
    return out


# -- residual branch ------------------------------------------------------------


def residual_component(
    k: Hypergraph3,
    col: Coloring,
    part: ColorPartition,
    red_m: ConnectedMatching,
    blue_m: ConnectedMatching,
    params: Params,
    minor: Color = Color.BLUE,
) -> tuple[Hypergraph3, tuple[int, ...], dict]:
    """Minor-colored component inside the major color's leftover core.

    With major = the other color of ``minor``: the residual core is the
    major core minus all matched vertices.  The anchor is the smallest-colex
    minor-colored edge inside it; vertices whose pair with the anchor's
    smallest vertex misses the major component's shadow are removed; the
    minor-colored component of the induced subhypergraph containing the
    anchor is taken, then 0-2 largest-id vertices are trimmed so the vertex
    count is a multiple of three.

    Returns (component host, trimmed vertices, info dict).  Raises
    BranchInapplicableError when no anchor exists or the anchor does not
    survive the shadow filter.
    """
    major = minor.other()
    major_info = part.major(major)
    if major_info is None:
        raise BranchInapplicableError(f"no major {major.value} component")
    covered = red_m.vertex_set() | blue_m.vertex_set()
    residual = [v for v in part.core(major) if v not in covered]
    residual_set = set(residual)

    anchor = None
    for e in col.subhypergraph(minor).edges:  # colex order
        if set(e) <= residual_set:
            anchor = e
            break
    if anchor is None:
        raise BranchInapplicableError(
            f"no {minor.value} edge inside the residual {major.value} core"
        )

    x = anchor[0]
    filtered = [
        v
        for v in residual
        if v == x or pair_key(v, x) in major_info.shadow
    ]
    if not set(anchor) <= set(filtered):
        raise BranchInapplicableError("anchor edge destroyed by the shadow filter")

    induced = col.subhypergraph(minor).induced(filtered)
    comp_edges = None
    for comp in connected_components(induced):
        if anchor in comp:
            comp_edges = comp
            break
    if comp_edges is None:
        raise BranchInapplicableError("anchor vanished from the induced subhypergraph")

    comp_vertices = set()
    for e in comp_edges:
        comp_vertices.update(e)
    trim_count = len(comp_vertices) % 3
    trimmed = tuple(sorted(comp_vertices, reverse=True)[:trim_count])
    keep = comp_vertices - set(trimmed)
    tmask = 0
    for v in trimmed:
        tmask |= 1 << v
    edges = [e for e in comp_edges if triple_mask(e) & tmask == 0]
    host = Hypergraph3(k.n, edges, vertices=keep)
    info = {
        "anchor": list(anchor),
        "filtered_out": sorted(residual_set - set(filtered)),
        "component_size": len(comp_vertices),
        "trimmed": list(trimmed),
    }
    return host, trimmed, info


@dataclass(frozen=True)
class PerfectMatchingResult:
    matching: tuple[Triple, ...]
    perfect: bool
    uncovered: tuple[int, ...]
    degree_condition_met: bool
    min_degree: int
    degree_threshold: float


def perfect_matching_dense(b: Hypergraph3) -> PerfectMatchingResult:
    """Exact perfect matching search; falls back to a maximum matching.

    Backtracks on the smallest uncovered vertex, trying its edges in colex
    order.  The dense-degree hypothesis (every vertex in at least 25/36 of
    all pairs' worth of edges) is evaluated and reported, never required: at
    desk scale the asymptotic theorem may simply not apply, in which case a
    maximum matching and the uncovered remainder are returned.
    """
    verts = sorted(b.vertices)
    m = len(verts)
    if m % 3 != 0:
        raise ValueError(f"vertex count {m} is not a multiple of three")

    degree: dict[int, int] = {v: 0 for v in verts}
    for e in b.edges:
        for v in e:
            degree[v] += 1
    threshold = (25.0 / 36.0) * comb(m, 2) if m else 0.0
    min_degree = min(degree.values(), default=0)
    condition = m > 0 and min_degree >= threshold

    by_lowest: dict[int, list[Triple]] = {v: [] for v in verts}
    for e in b.edges:  # colex order
        by_lowest[min(e)].append(e)

    full = 0
    for v in verts:
        full |= 1 << v

    def extend(mask: int, acc: list[Triple]) -> bool:
        if mask == 0:
            return True
        low = (mask & -mask).bit_length() - 1
        for e in by_lowest.get(low, ()):
            em = triple_mask(e)
            if em & mask == em:
                acc.append(e)
                if extend(mask & ~em, acc):
                    return True
                acc.pop()
        return False

    acc: list[Triple] = []
    if extend(full, acc):
        return PerfectMatchingResult(
            matching=tuple(acc),
            perfect=True,
            uncovered=(),
            degree_condition_met=condition,
            min_degree=min_degree,
            degree_threshold=threshold,
        )

    # no perfect matching: exact maximum matching by bounded backtracking
    best: list[Triple] = []

    def search(mask: int, acc: list[Triple]) -> None:
        nonlocal best
        if len(acc) + mask.bit_count() // 3 <= len(best):
            return
        if mask == 0:
            if len(acc) > len(best):
                best = list(acc)
            return
        low = (mask & -mask).bit_length() - 1
        for e in by_lowest.get(low, ()):
            em = triple_mask(e)
            if em & mask == em:
                acc.append(e)
                search(mask & ~em, acc)
                acc.pop()
        # leave the lowest vertex uncovered
        if len(acc) > len(best):
            best = list(acc)
        search(mask & ~(1 << low), acc)

    search(full, [])
    covered = 0
    for e in best:
        covered |= triple_mask(e)
    uncovered = tuple(v for v in verts if not covered >> v & 1)
    return PerfectMatchingResult(
        matching=tuple(sorted(best, key=colex_index)),
        perfect=False,
        uncovered=uncovered,
        degree_condition_met=condition,
        min_degree=min_degree,
        degree_threshold=threshold,
    )


def dissolve_matching(
    k: Hypergraph3,
    col: Coloring,
    part: ColorPartition,
    minor_edges,
    minor: Color = Color.BLUE,
) -> tuple[tuple[Triple, ...], tuple[int, ...]]:
    """Split minor-colored matching edges and rematch the pairs major-colored.

    Every minor edge splits into its two smallest vertices (a pair) and its
    largest (a spare).  Pairs are processed in colex order; each takes the
    smallest unused spare from a *different* edge such that the resulting
    triple is an edge of k and the pair's first vertex with the spare lies
    in the major component's shadow.  All matched triples must come out
    major-colored (the exchange argument's conclusion) or the branch is
    declared inapplicable.

    Requires every minor edge inside the major core — the state the exchange
    moves leave behind when their claims are in force.
    """
    major = minor.other()
    major_info = part.major(major)
    if major_info is None:
        raise BranchInapplicableError(f"no major {major.value} component")
    core = set(part.core(major))
    minor_edges = sorted(minor_edges, key=colex_index)
    for e in minor_edges:
        if not set(e) <= core:
            raise BranchInapplicableError(
                f"minor edge {e} is not inside the {major.value} core"
            )

    pairs = []  # (pair, owner index)
    spares = []  # (vertex, owner index)
    for idx, e in enumerate(minor_edges):
        pairs.append(((e[0], e[1]), idx))
        spares.append((e[2], idx))
    pairs.sort(key=lambda item: (comb(item[0][1], 2) + item[0][0]))
    spares.sort()

    used = set()
    matched: list[Triple] = []
    matched_vertices: set[int] = set()
    for (u, v), owner in pairs:
        for w, w_owner in spares:
            if w in used or w_owner == owner:
                continue
            t = canon_triple(u, v, w)
            if not k.has_edge(t):
                continue
            if pair_key(u, w) not in major_info.shadow:
                continue
            used.add(w)
            matched.append(t)
            matched_vertices.update(t)
            break

    off_color = [t for t in matched if col.color_of(t) is not major]
    if off_color:
        raise BranchInapplicableError(
            f"dissolution produced off-{major.value} triples: {off_color}"
        )
    all_vertices: set[int] = set()
    for e in minor_edges:
        all_vertices.update(e)
    leftovers = tuple(sorted(all_vertices - matched_vertices))
    return tuple(sorted(matched, key=colex_index)), leftovers


# -- the full pipeline -----------------------------------------------------------


@dataclass
class CoverResult:
    """Two disjoint monochromatic connected matchings plus bookkeeping.

    ``uncovered`` is relative to the vertices of the *original* host, so
    cleanup casualties count as uncovered.  ``covered`` is always
    |V(red)| + |V(blue)|.
    """

    red: ConnectedMatching
    blue: ConnectedMatching
    covered: int
    uncovered: tuple[int, ...]
    trace: tuple[dict, ...]


def _assemble(
    h: Hypergraph3,
    red: ConnectedMatching,
    blue: ConnectedMatching,
    trace: list[dict],
) -> CoverResult:
    covered_set = red.vertex_set() | blue.vertex_set()
    return CoverResult(
        red=red,
        blue=blue,
        covered=len(covered_set),
        uncovered=tuple(sorted(h.vertices - covered_set)),
        trace=tuple(trace),
    )


def _run_branch(
    k: Hypergraph3,
    col: Coloring,
    part: ColorPartition,
    red_m: ConnectedMatching,
    blue_m: ConnectedMatching,
    params: Params,
    minor: Color,
) -> tuple[ConnectedMatching, ConnectedMatching, list[dict]]:
    """Residual branch with ``minor`` = the color being dissolved/rebuilt."""
    major = minor.other()
    major_m = red_m if major is Color.RED else blue_m
    minor_m = blue_m if major is Color.RED else red_m

    host, trimmed, info = residual_component(k, col, part, red_m, blue_m, params, minor)
    pm = perfect_matching_dense(host)
    rematched, leftovers = dissolve_matching(k, col, part, minor_m.edges, minor)

    major_final = build_matching(
        col,
        major,
        tuple(major_m.edges) + rematched,
        part.major_red if major is Color.RED else part.major_blue,
    )
    minor_comp_id = None
    if pm.matching:
        minor_comp_id = f"{minor.value}:{colex_index(host.edges[0])}"
    minor_final = build_matching(col, minor, pm.matching, minor_comp_id)

    events = [
        {
            "stage": "branch",
            "detail": {
                "minor": minor.value,
                "residual": info,
                "pm_perfect": pm.perfect,
                "pm_size": len(pm.matching),
                "pm_degree_ok": pm.degree_condition_met,
                "rematched": len(rematched),
                "dissolve_leftovers": list(leftovers),
            },
        }
    ]
    if major is Color.RED:
        return major_final, minor_final, events
    return minor_final, major_final, events


def cover(h: Hypergraph3, col: Coloring, gamma: float) -> CoverResult:
    """Full pipeline; the returned result always satisfies ``verify_cover``.

    clean -> partition -> local search; if both leftover cores are already
    below the 12*delta*t threshold the local-search result stands ("we are
    done" in the counting argument).  Otherwise both orientations of the
    residual branch are attempted and the highest-coverage result that
    verifies is returned, falling back to the local-search result when a
    branch's preconditions fail.
    """
    params = Params.from_gamma(gamma)
    trace: list[dict] = []

    k, report = clean(h, gamma)
    trace.append(
        {
            "stage": "clean",
            "detail": {
                "t_before": report.t_before,
                "t_after": report.t_after,
                "deleted": list(report.deleted),
                "rounds": report.rounds,
                "deactivated_pairs": report.deactivated_pairs,
                "bound_held": report.bound_held,
            },
        }
    )
    if k.t == h.t and k.edge_count == h.edge_count:
        k = h  # cleanup was a no-op; keep the caller's cached structures
        col_k = col
    else:
        col_k = col.restrict(k)
    part = partition_vertices(k, col_k, params)
    trace.append(
        {
            "stage": "partition",
            "detail": {
                "red_side": len(part.red_side),
                "blue_side": len(part.blue_side),
                "major_red": part.major_red,
                "major_blue": part.major_blue,
                "red_core": len(part.red_core),
                "blue_core": len(part.blue_core),
                "hypotheses": dict(part.hypotheses),
            },
        }
    )

    red_m, blue_m, moves = local_search_matching(k, col_k, part, params)
    trace.extend(moves)
    claims = structural_claims(part, red_m, blue_m, params, k.t)
    trace.append({"stage": "claims", "detail": claims})

    base = _assemble(h, red_m, blue_m, list(trace))
    ok, diags = verify_cover(base, h, col)
    if not ok:
        raise RcoverError(f"internal: local-search result failed verification: {diags}")

    covered_set = red_m.vertex_set() | blue_m.vertex_set()
    res_red = len([v for v in part.red_core if v not in covered_set])
    res_blue = len([v for v in part.blue_core if v not in covered_set])
    th = params.thresholds(k.t)
    if res_red < th["twelve_delta_t"] and res_blue < th["twelve_delta_t"]:
        trace.append(
            {
                "stage": "early-exit",
                "detail": {
                    "residual_red": res_red,
                    "residual_blue": res_blue,
                    "twelve_delta_t": th["twelve_delta_t"],
                },
            }
        )
        return _assemble(h, red_m, blue_m, trace)

    candidates = [base]
    # the orientation whose residual core is larger plays the major role first
    first_minor = Color.BLUE if res_red >= res_blue else Color.RED
    for minor in (first_minor, first_minor.other()):
        try:
            bred, bblue, events = _run_branch(
                k, col_k, part, red_m, blue_m, params, minor
            )
        except (BranchInapplicableError, RcoverError) as exc:
            trace.append(
                {
                    "stage": "branch",
                    "detail": {"minor": minor.value, "error": str(exc)},
                }
            )
            continue
        branch_trace = list(trace) + events
        cand = _assemble(h, bred, bblue, branch_trace)
        ok, diags = verify_cover(cand, h, col)
        if ok:
            candidates.append(cand)
            trace.extend(events)
        else:
            trace.append(
                {
                    "stage": "branch",
                    "detail": {"minor": minor.value, "invalid": diags},
                }
            )

    best = max(candidates, key=lambda r: r.covered)
    trace.append(
        {
            "stage": "select",
            "detail": {
                "candidates": [r.covered for r in candidates],
                "covered": best.covered,
            },
        }
    )
    return CoverResult(
        red=best.red,
        blue=best.blue,
        covered=best.covered,
        uncovered=best.uncovered,
        trace=tuple(trace),
    )


# -- verification -----------------------------------------------------------------


def verify_cover(r: CoverResult, h: Hypergraph3, col: Coloring) -> tuple[bool, list[str]]:
    """Certificate check for cover results; returns (ok, diagnostics)."""
    diags: list[str] = []

    for m, want_color in ((r.red, Color.RED), (r.blue, Color.BLUE)):
        tag = want_color.value
        if m.color is not want_color:
            diags.append(f"{tag}: matching color field mismatch")
        seen: set[int] = set()
        for e in m.edges:
            if not h.has_edge(e):
                diags.append(f"{tag}: matching edge {e} missing from host")
                continue
            if col.color_of(e) is not m.color:
                diags.append(f"{tag}: matching edge color wrong for {e}")
            if seen & set(e):
                diags.append(f"{tag}: matching disjointness violated at {e}")
            seen.update(e)
        if list(m.edges) != sorted(m.edges, key=colex_index):
            diags.append(f"{tag}: edges not in colex order")
        expected_certs = max(0, len(m.edges) - 1)
        if len(m.certificates) != expected_certs:
            diags.append(f"{tag}: certificate count {len(m.certificates)} != {expected_certs}")
        else:
            for i, cert in enumerate(m.certificates):
                if not cert.is_valid():
                    diags.append(f"{tag}: certificate {i} pseudo-path shape invalid")
                    continue
                if cert.edges[0] != m.edges[i] or cert.edges[-1] != m.edges[i + 1]:
                    diags.append(f"{tag}: certificate {i} endpoints wrong")
                for e in cert.edges:
                    if not h.has_edge(e):
                        diags.append(f"{tag}: certificate {i} edge {e} missing from host")
                    elif col.color_of(e) is not m.color:
                        diags.append(f"{tag}: certificate color wrong at {e}")
        if m.edges and m.component_id is None:
            diags.append(f"{tag}: nonempty matching without component id")

    red_v = r.red.vertex_set()
    blue_v = r.blue.vertex_set()
    if red_v & blue_v:
        diags.append(f"disjointness violated: {sorted(red_v & blue_v)}")
    if r.covered != len(red_v) + len(blue_v):
        diags.append(f"covered count {r.covered} != {len(red_v) + len(blue_v)}")
    expected_uncovered = tuple(sorted(h.vertices - red_v - blue_v))
    if tuple(r.uncovered) != expected_uncovered:
        diags.append("uncovered set inconsistent with matchings")
    return not diags, diags
