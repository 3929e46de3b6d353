from __future__ import annotations

import json

import pytest

from primegraph.catalog import (
    CONSTRUCTED,
    PAPER_FIGURE,
    CatalogEntry,
    CatalogError,
    builtin_fixtures,
    export_graph6,
    export_json,
    fixture,
    ingest_graph6,
    load_catalog,
    load_json,
    parse_edge_file,
    read_graphs,
    save_catalog,
)
from primegraph.circulant import CirculantSpec, g_circulant
from primegraph.graph import (
    complement,
    complete_graph,
    cycle_graph,
    delete_vertex,
    is_regular,
    to_graph6,
)
from primegraph.products import strong_product
from primegraph.verify import check_minimal_prime_graph

C5 = cycle_graph(5)

# graph6 strings pinned so figure entries stay byte-stable across runs
PINNED = {
    "C5": "Dhc",
    "FIG1_8": "GzK[]K",
    "FIG2_6": "EhfG",
    "FIG3_11": "JQin\\zmzn\\_",
    "FIG4_10": "IhfNJcxfG",
    "FIG4_10R": "IhfNJcxfG",
    "FIG5_9": "HQyurzU",
    "FIG5_10": "IQyurzU\\W",
    "FIG6_15": "NQyurzUnvZI|nk]vNlg",
    "FIG6_16": "OQyurzUnvZI|nk]vNlnUv",
}


def test_fixture_names_and_sizes():
    sizes = {e.name: e.graph.n for e in builtin_fixtures()}
    assert sizes == {"C5": 5, "FIG1_8": 8, "FIG2_6": 6, "FIG3_11": 11, "FIG4_10": 10,
                     "FIG4_10R": 10, "FIG5_9": 9, "FIG5_10": 10, "FIG6_15": 15, "FIG6_16": 16}
    assert fixture("FIG1_8").graph.num_edges == 16
    assert fixture("FIG1_8").provenance == PAPER_FIGURE
    assert fixture("C5").provenance == CONSTRUCTED


def test_fixtures_byte_stable():
    assert {e.name: to_graph6(e.graph) for e in builtin_fixtures()} == PINNED


def test_fixture_captions():
    assert check_minimal_prime_graph(fixture("FIG1_8").graph).is_minimal
    fig3 = fixture("FIG3_11").graph
    assert check_minimal_prime_graph(fig3).is_minimal and is_regular(fig3) is None
    assert delete_vertex(fixture("FIG5_10").graph, 9) == fixture("FIG5_9").graph
    assert delete_vertex(fixture("FIG6_16").graph, 15) == fixture("FIG6_15").graph
    assert fixture("FIG4_10").graph == strong_product(complete_graph(2), C5)


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("NOPE")
    assert fixture("GC_11_2").graph == complement(g_circulant(CirculantSpec(11, 2)))


def test_edge_file_parser():
    ef = parse_edge_file("# demo\nn 3\nlabels a b c\ncomplement\n0 1\n1 2\n")
    assert ef.complement and ef.labels == ("a", "b", "c") and ef.graph.num_edges == 2
    with pytest.raises(CatalogError):
        parse_edge_file("0 1\n")
    with pytest.raises(CatalogError):
        parse_edge_file("n 3\n0 x\n")


def test_ingest_single_line(tmp_path):
    p = tmp_path / "five.g6"
    p.write_text("Dhc\n")
    (entry,) = ingest_graph6(p)
    assert entry.name == "five" and entry.graph == C5 and entry.graph.num_edges == 5


def test_ingest_multi_and_errors(tmp_path):
    p = tmp_path / "many.g6"
    p.write_text("Dhc\n\nA_\n")
    entries = ingest_graph6(p)
    assert [e.name for e in entries] == ["many_0", "many_1"]
    p.write_text("Dhc\nD??x\n")
    with pytest.raises(CatalogError, match="line 2"):
        ingest_graph6(p)


def test_export_ingest_round_trip(tmp_path):
    entries = builtin_fixtures()
    p = tmp_path / "all.g6"
    p.write_text(export_graph6(entries))
    back = ingest_graph6(p)
    assert [e.graph for e in back] == [e.graph for e in entries]
    assert p.read_text() == export_graph6(back)


def test_json_round_trip():
    entries = builtin_fixtures()
    back = load_json(export_json(entries))
    assert [(e.name, e.graph, e.provenance, e.tags) for e in back] == [
        (e.name, e.graph, e.provenance, e.tags) for e in entries
    ]


def test_catalog_directory(tmp_path):
    entries = builtin_fixtures()
    d = save_catalog(entries, tmp_path / "cat")
    assert (d / "index.json").exists() and (d / "FIG1_8.g6").exists()
    back = load_catalog(d)
    assert back == entries
    assert back[1].labels == entries[1].labels
    with pytest.raises(CatalogError):
        save_catalog([entries[0], entries[0]], tmp_path / "dup")


def test_read_graphs_variants(tmp_path):
    assert read_graphs("FIG2_6")[0].name == "FIG2_6"
    j = tmp_path / "g.json"
    j.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [0, 4]]}))
    (e,) = read_graphs(j)
    assert e.graph == C5 and e.name == "g"
    # '[' is a legal graph6 size byte (n = 28)
    g6 = tmp_path / "big.txt"
    g6.write_text(to_graph6(cycle_graph(28)) + "\n")
    assert read_graphs(g6)[0].graph == cycle_graph(28)
    with pytest.raises(CatalogError):
        read_graphs(tmp_path / "missing.g6")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(CatalogError):
        read_graphs(bad)


def test_entry_label():
    e = fixture("FIG1_8")
    assert e.label(0) == "1"
    assert CatalogEntry("x", C5, CONSTRUCTED).label(3) == "3"
