"""Named graphs: the figure fixtures, graph6 ingestion and catalog directories.

A catalog directory holds ``<name>.g6`` (one graph6 line) per entry and an
``index.json`` listing names, provenance, tags and optional display labels.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .circulant import CirculantSpec, g_circulant
from .graph import (
    Graph,
    GraphError,
    complement,
    cycle_graph,
    delete_vertex,
    from_graph6,
    from_json_dict,
    make_graph,
    to_graph6,
    to_json_dict,
)

PAPER_FIGURE = "paper-figure"
INGESTED = "ingested"
CONSTRUCTED = "constructed"


class CatalogError(GraphError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    provenance: str
    tags: tuple[str, ...] = ()
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


@dataclass(frozen=True)
class EdgeFile:
    graph: Graph
    labels: tuple[str, ...] | None
    complement: bool


def parse_edge_file(text: str) -> EdgeFile:
    """Parse the fixture format: ``#`` comments, ``n N``, optional
    ``labels ...`` and ``complement`` lines, then one ``u v`` pair per line."""
    n = None
    labels = None
    is_complement = False
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "n":
            n = int(rest[0])
        elif head == "labels":
            labels = tuple(rest)
        elif head == "complement":
            is_complement = True
        else:
            try:
                u, v = int(head), int(rest[0])
            except (ValueError, IndexError) as exc:
                raise CatalogError(f"line {lineno}: cannot parse {raw!r}") from exc
            edges.append((u, v))
    if n is None:
        raise CatalogError("edge file has no 'n' line")
    if labels is not None and len(labels) != n:
        raise CatalogError(f"{len(labels)} labels for {n} vertices")
    return EdgeFile(make_graph(n, edges), labels, is_complement)


def _fixture_text(filename: str) -> str:
    return resources.files("primegraph").joinpath("data").joinpath("fixtures").joinpath(filename).read_text()


def _load_fixture(filename: str) -> EdgeFile:
    return parse_edge_file(_fixture_text(filename))


def builtin_fixtures() -> list[CatalogEntry]:
    fig1 = _load_fixture("FIG1_8.edges")
    fig5 = _load_fixture("FIG5.complement.edges")
    fig6 = _load_fixture("FIG6.complement.edges")
    fig4 = _load_fixture("FIG4_10.edges")
    return [
        CatalogEntry("C5", cycle_graph(5), CONSTRUCTED, ("minimal", "base")),
        CatalogEntry("FIG1_8", fig1.graph, PAPER_FIGURE, ("minimal",), fig1.labels),
        CatalogEntry("FIG2_6", _load_fixture("FIG2_6.edges").graph, PAPER_FIGURE,
                     ("minimal", "reseminant")),
        CatalogEntry("FIG3_11", _load_fixture("FIG3_11.edges").graph, PAPER_FIGURE,
                     ("minimal", "non-regular")),
        CatalogEntry("FIG4_10", fig4.graph, PAPER_FIGURE,
                     ("minimal", "reseminant", "strong-product"), fig4.labels),
        CatalogEntry("FIG4_10R", _load_fixture("FIG4_10R.edges").graph, PAPER_FIGURE,
                     ("minimal", "reseminant")),
        CatalogEntry("FIG5_9", complement(delete_vertex(fig5.graph, 9)), PAPER_FIGURE,
                     ("minimal",)),
        CatalogEntry("FIG5_10", complement(fig5.graph), PAPER_FIGURE,
                     ("minimal", "clique-generation")),
        CatalogEntry("FIG6_15", complement(delete_vertex(fig6.graph, 15)), PAPER_FIGURE,
                     ("minimal",)),
        CatalogEntry("FIG6_16", complement(fig6.graph), PAPER_FIGURE,
                     ("minimal", "vertex-duplication")),
    ]


def circulant_entry(n: int) -> CatalogEntry:
    spec = CirculantSpec.from_n(n)
    return CatalogEntry(f"GC_{n}_{spec.k}", complement(g_circulant(spec)), CONSTRUCTED,
                        ("minimal", "base", "circulant-complement"))


def fixture(name: str) -> CatalogEntry:
    for entry in builtin_fixtures():
        if entry.name == name:
            return entry
    if name.startswith("GC_"):
        try:
            return circulant_entry(int(name.split("_")[1]))
        except (IndexError, ValueError):
            pass
    raise KeyError(name)


def fixture_graph(name: str) -> Graph:
    return fixture(name).graph


# ----------------------------------------------------------------- graph6 I/O


def parse_graph6_lines(text: str, stem: str = "graph") -> list[CatalogEntry]:
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        try:
            graphs.append(from_graph6(line))
        except GraphError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from exc
    if len(graphs) == 1:
        return [CatalogEntry(stem, graphs[0], INGESTED)]
    return [CatalogEntry(f"{stem}_{i}", g, INGESTED) for i, g in enumerate(graphs)]


def ingest_graph6(path: str | Path) -> list[CatalogEntry]:
    """One entry per non-blank line; a single-graph file keeps the bare stem."""
    p = Path(path)
    return parse_graph6_lines(p.read_text(), p.stem)


def export_graph6(entries: Iterable[CatalogEntry]) -> str:
    return "".join(to_graph6(e.graph) + "\n" for e in entries)


def export_json(entries: Iterable[CatalogEntry]) -> str:
    payload = [
        {"name": e.name, "provenance": e.provenance, "tags": list(e.tags), **to_json_dict(e.graph)}
        for e in entries
    ]
    return json.dumps(payload, indent=1)


def load_json(text: str) -> list[CatalogEntry]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    out = []
    for i, item in enumerate(data):
        out.append(CatalogEntry(item.get("name", f"graph_{i}"), from_json_dict(item),
                                item.get("provenance", INGESTED), tuple(item.get("tags", ()))))
    return out


def save_catalog(entries: Iterable[CatalogEntry], directory: str | Path) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    index = []
    names = set()
    for e in entries:
        if e.name in names:
            raise CatalogError(f"duplicate catalog name {e.name!r}")
        names.add(e.name)
        (d / f"{e.name}.g6").write_text(to_graph6(e.graph) + "\n")
        record = {"name": e.name, "n": e.graph.n, "m": e.graph.num_edges,
                  "provenance": e.provenance, "tags": list(e.tags)}
        if e.labels:
            record["labels"] = list(e.labels)
        index.append(record)
    (d / "index.json").write_text(json.dumps(index, indent=1) + "\n")
    return d


def load_catalog(directory: str | Path) -> list[CatalogEntry]:
    d = Path(directory)
    index = json.loads((d / "index.json").read_text())
    out = []
    for record in index:
        g = from_graph6((d / f"{record['name']}.g6").read_text())
        labels = tuple(record["labels"]) if "labels" in record else None
        out.append(CatalogEntry(record["name"], g, record["provenance"],
                                tuple(record.get("tags", ())), labels))
    return out


def read_graphs(path: str | Path) -> list[CatalogEntry]:
    """Load graphs from a graph6 file, a JSON edge-list file or a builtin name."""
    p = Path(path)
    if not p.exists():
        try:
            return [fixture(str(path))]
        except KeyError:
            raise CatalogError(f"no such file or fixture: {path}") from None
    text = p.read_text()
    looks_json = p.suffix == ".json"
    if not looks_json and text.lstrip().startswith(("{", "[")):
        # '{' and '[' are also legal graph6 size bytes
        try:
            json.loads(text)
            looks_json = True
        except json.JSONDecodeError:
            pass
    if looks_json:
        try:
            entries = load_json(text)
        except (json.JSONDecodeError, AttributeError, TypeError, KeyError) as exc:
            raise CatalogError(f"{p}: malformed JSON: {exc}") from exc
        if len(entries) == 1 and entries[0].name.startswith("graph_"):
            entries = [CatalogEntry(p.stem, entries[0].graph, INGESTED)]
        return entries
    return parse_graph6_lines(text, p.stem)
