"""Instance and result file formats.

h3json
    JSON object with fields ``n`` (int), ``edges`` (array of [a,b,c] with
    a < b < c, sorted by colex index) and optional ``colors`` (array of
    "R"/"B" aligned with ``edges``).  Serialized canonically: sorted keys,
    compact separators, trailing newline — byte-exact for a given instance.

h3bits
    Complete colorings only.  Header line ``H3BITS n`` followed by
    ceil(C(n,3) / 8) bytes.  Bit j of byte k (least significant bit first)
    is the color of the triple with colex index 8k + j; 1 means red.

Result payloads (cover results, cycle pairs, oracle reports) are plain JSON
documents produced by the ``*_to_json`` helpers below; timing data is never
part of them so reruns are byte-identical.
"""

from __future__ import annotations

import json
from math import comb
from pathlib import Path

from .core import Color, Coloring, Hypergraph3, PseudoPath, colex_index, colex_inverse
from .errors import FormatError

_H3BITS_MAGIC = b"H3BITS"


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- h3json ------------------------------------------------------------------


def h3json_dumps(h: Hypergraph3, col: Coloring | None = None) -> str:
    doc: dict = {"n": h.n, "edges": [list(t) for t in h.edges]}
    if col is not None:
        if col.host is not h and frozenset(col.host.edges) != frozenset(h.edges):
            raise FormatError("coloring does not match the hypergraph")
        doc["colors"] = col.color_sequence()
    return canonical_json(doc)


def h3json_loads(text: str) -> tuple[Hypergraph3, Coloring | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise FormatError("h3json needs 'n' and 'edges' fields")
    n = doc["n"]
    edges = [tuple(e) for e in doc["edges"]]
    for e in edges:
        if len(e) != 3 or not (e[0] < e[1] < e[2]):
            raise FormatError(f"edge {e} is not an ascending triple")
    h = Hypergraph3(n, edges)
    colors = doc.get("colors")
    if colors is None:
        return h, None
    if len(colors) != len(edges):
        raise FormatError("colors array must align with edges")
    order = sorted(range(len(edges)), key=lambda i: colex_index(edges[i]))
    col = Coloring.from_sequence(h, [colors[i] for i in order])
    return h, col


# -- h3bits ------------------------------------------------------------------


def h3bits_dumps(col: Coloring) -> bytes:
    h = col.host
    total = comb(h.n, 3)
    if h.edge_count != total:
        raise FormatError("h3bits requires a complete host")
    buf = bytearray((total + 7) // 8)
    for t in col.red:
        i = colex_index(t)
        buf[i >> 3] |= 1 << (i & 7)
    return _H3BITS_MAGIC + b" " + str(h.n).encode() + b"\n" + bytes(buf)


def h3bits_loads(data: bytes) -> tuple[Hypergraph3, Coloring]:
    if not data.startswith(_H3BITS_MAGIC):
        raise FormatError("missing H3BITS header")
    nl = data.find(b"\n")
    if nl < 0:
        raise FormatError("missing header newline")
    header = data[:nl].split()
    if len(header) != 2:
        raise FormatError("header must be 'H3BITS n'")
    try:
        n = int(header[1])
    except ValueError as exc:
        raise FormatError("bad vertex count in header") from exc
    total = comb(n, 3)
    body = data[nl + 1 :]
    if len(body) != (total + 7) // 8:
        raise FormatError(
            f"expected {(total + 7) // 8} payload bytes, got {len(body)}"
        )
    host = Hypergraph3.complete(n)
    red = [
        colex_inverse(i) for i in range(total) if body[i >> 3] >> (i & 7) & 1
    ]
    return host, Coloring(host, red)


# -- file helpers ------------------------------------------------------------


def save_instance(path, h: Hypergraph3, col: Coloring | None = None) -> None:
    path = Path(path)
    if path.suffix == ".h3bits":
        if col is None:
            raise FormatError("h3bits stores colorings; none given")
        path.write_bytes(h3bits_dumps(col))
    else:
        path.write_text(h3json_dumps(h, col))


def load_instance(path) -> tuple[Hypergraph3, Coloring | None]:
    """Sniffs h3bits by magic, otherwise parses h3json."""
    data = Path(path).read_bytes()
    if data.startswith(_H3BITS_MAGIC):
        return h3bits_loads(data)
    return h3json_loads(data.decode())


# -- result payloads ---------------------------------------------------------


def matching_to_json(m) -> dict:
    return {
        "color": m.color.value,
        "edges": [list(e) for e in m.edges],
        "component": m.component_id,
        "certificates": [[list(e) for e in p.edges] for p in m.certificates],
    }


def matching_from_json(doc) -> "ConnectedMatching":
    from .matcher import ConnectedMatching

    return ConnectedMatching(
        color=Color(doc["color"]),
        edges=tuple(tuple(e) for e in doc["edges"]),
        component_id=doc["component"],
        certificates=tuple(
            PseudoPath(tuple(tuple(e) for e in p)) for p in doc["certificates"]
        ),
    )


def cover_to_json(r) -> dict:
    return {
        "type": "cover",
        "red": matching_to_json(r.red),
        "blue": matching_to_json(r.blue),
        "covered": r.covered,
        "uncovered": list(r.uncovered),
        "trace": [dict(ev) for ev in r.trace],
    }


def cover_from_json(doc) -> "CoverResult":
    from .matcher import CoverResult

    if doc.get("type") != "cover":
        raise FormatError("not a cover result document")
    return CoverResult(
        red=matching_from_json(doc["red"]),
        blue=matching_from_json(doc["blue"]),
        covered=doc["covered"],
        uncovered=tuple(doc["uncovered"]),
        trace=tuple(doc["trace"]),
    )


def cycle_pair_to_json(outcome) -> dict:
    doc = {"type": "cycle-pair", "status": outcome.status}
    if outcome.pair is not None:
        doc["red"] = list(outcome.pair.red.order)
        doc["blue"] = list(outcome.pair.blue.order)
        doc["uncovered"] = list(outcome.pair.uncovered)
    return doc


def oracle_report_to_json(rep) -> dict:
    return {
        "type": "oracle",
        "optimum": rep.optimum,
        "witness": rep.witness,
        "instances_searched": rep.instances_searched,
    }
