"""File formats: h3json/h3bits round trips, exact bytes, result payloads."""

import pytest

from rcover.core import Coloring, Hypergraph3
from rcover.errors import FormatError
from rcover.formats import (
    cover_from_json,
    cover_to_json,
    h3bits_dumps,
    h3bits_loads,
    h3json_dumps,
    h3json_loads,
    load_instance,
    save_instance,
)
from rcover.generators import uniform_instance
from rcover.matcher import cover, verify_cover


def test_h3json_roundtrip_uncolored():
    h = Hypergraph3(6, [(0, 1, 2), (2, 3, 4), (1, 4, 5)])
    text = h3json_dumps(h)
    h2, col = h3json_loads(text)
    assert col is None
    assert h2.n == h.n and h2.edges == h.edges
    assert h3json_dumps(h2) == text  # canonical: reserialization is identical


def test_h3json_roundtrip_colored():
    col = uniform_instance(7, 0.5, 9)
    text = h3json_dumps(col.host, col)
    h2, col2 = h3json_loads(text)
    assert col2 is not None
    assert col2.red == col.red
    assert h3json_dumps(h2, col2) == text


def test_h3json_validation():
    with pytest.raises(FormatError):
        h3json_loads("{}")
    with pytest.raises(FormatError):
        h3json_loads('{"n": 4, "edges": [[2,1,0]]}')
    with pytest.raises(FormatError):
        h3json_loads('{"n": 4, "edges": [[0,1,2]], "colors": []}')


def test_h3bits_exact_bytes():
    # n=4: triples in colex order are {0,1,2},{0,1,3},{0,2,3},{1,2,3};
    # red at colex 0 and 2 packs (LSB first) to the single byte 0b0101 = 5
    host = Hypergraph3.complete(4)
    col = Coloring(host, [(0, 1, 2), (0, 2, 3)])
    data = h3bits_dumps(col)
    assert data == b"H3BITS 4\n\x05"
    h2, col2 = h3bits_loads(data)
    assert h2.n == 4
    assert col2.red == {(0, 1, 2), (0, 2, 3)}


def test_h3bits_roundtrip():
    col = uniform_instance(9, 0.3, 123)
    h2, col2 = h3bits_loads(h3bits_dumps(col))
    assert col2.red == col.red and col2.blue == col.blue


def test_h3bits_requires_complete_host():
    h = Hypergraph3(5, [(0, 1, 2)])
    with pytest.raises(FormatError):
        h3bits_dumps(Coloring(h, [(0, 1, 2)]))


def test_h3bits_header_errors():
    with pytest.raises(FormatError):
        h3bits_loads(b"NOPE 4\n\x05")
    with pytest.raises(FormatError):
        h3bits_loads(b"H3BITS 4\n")  # payload too short


def test_save_load_sniffing(tmp_path):
    col = uniform_instance(6, 0.5, 4)
    bits = tmp_path / "a.h3bits"
    js = tmp_path / "a.h3json"
    save_instance(bits, col.host, col)
    save_instance(js, col.host, col)
    for path in (bits, js):
        h, c = load_instance(path)
        assert c is not None and c.red == col.red


def test_cover_result_json_roundtrip():
    col = uniform_instance(8, 0.5, 21)
    res = cover(col.host, col, 1e-3)
    doc = cover_to_json(res)
    back = cover_from_json(doc)
    assert back.covered == res.covered
    assert back.red.edges == res.red.edges
    assert back.blue.certificates == res.blue.certificates
    ok, diags = verify_cover(back, col.host, col)
    assert ok, diags
