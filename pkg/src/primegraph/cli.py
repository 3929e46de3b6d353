"""Command-line front end.

Exit status: 0 on success, 1 when a verification answers "no" (for example
``verify`` on a graph that is not a minimal prime graph), 2 when the command
could not run (bad flags, unreadable input, size limits).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .automorphism import classify_c5_reseminant_aut, decompose_aut, quotient_has_reflection
from .catalog import (
    CatalogEntry,
    CatalogError,
    builtin_fixtures,
    circulant_entry,
    fixture,
    read_graphs,
    save_catalog,
)
from .circulant import (
    CirculantSpec,
    block_coloring,
    g_circulant,
    super_base_report,
)
from .generation import classify_site, enumerate_generation_sites, lemma_checks
from .graph import (
    Graph,
    GraphError,
    complement,
    degree_sequence,
    find_triangle,
    is_regular,
    to_graph6,
    to_json_dict,
)
from .products import ProductKind, product
from .reseminant import (
    C5,
    build_reseminant,
    degree_vector,
    duplicate_vertex,
    is_base_graph,
    regular_reseminant_verdict,
    twin_partition,
)
from .verify import check_minimal_prime_graph, is_solvable_prime_graph

OK, NEGATIVE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def graph_payload(g: Graph) -> dict:
    return {"graph6": to_graph6(g), **to_json_dict(g)}


def _emit(payload, pretty: bool, summary: str | None = None) -> None:
    if pretty and summary is not None:
        print(summary)
    else:
        print(json.dumps(payload, indent=2 if pretty else None))


def _load(source: str) -> list[CatalogEntry]:
    return read_graphs(source)


def _load_one(source: str) -> CatalogEntry:
    entries = _load(source)
    if len(entries) != 1:
        raise UsageError(f"{source}: expected one graph, found {len(entries)}")
    return entries[0]


def _parse_w(text: str) -> list[int]:
    try:
        w = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad multiplicity vector {text!r}") from None
    if any(x < 0 for x in w):
        raise UsageError("multiplicities must be non-negative")
    return w


# ---------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    results = []
    for entry in _load(args.graph):
        report = check_minimal_prime_graph(entry.graph)
        results.append({"name": entry.name, "n": entry.graph.n, **report.to_dict()})
    payload = results[0] if len(results) == 1 else results
    lines = [f"{r['name']}: minimal={r['is_minimal']} solvable={r['is_solvable']} "
             f"reason={r['reason']}" for r in results]
    _emit(payload, args.pretty, "\n".join(lines))
    return OK if all(r["is_minimal"] for r in results) else NEGATIVE


def cmd_duplicate(args) -> int:
    entry = _load_one(args.graph)
    g = duplicate_vertex(entry.graph, args.vertex)
    report = check_minimal_prime_graph(g)
    payload = {"graph": graph_payload(g), "is_minimal": report.is_minimal}
    _emit(payload, args.pretty, f"{to_graph6(g)} minimal={report.is_minimal}")
    return OK


def cmd_reseminant(args) -> int:
    w = _parse_w(args.w)
    base = _load_one(args.base).graph if args.base else C5
    g = build_reseminant(base, w)
    payload = {"graph": graph_payload(g), "degrees": degree_sequence(g),
               "regular_degree": is_regular(g),
               "twin_class_sizes": list(twin_partition(g).sizes)}
    if base == C5:
        verdict = regular_reseminant_verdict(w)
        payload["degree_vector"] = degree_vector(w)
        payload["verdict"] = {"regular": verdict.regular, "k": verdict.k, "h": verdict.h,
                              "n": verdict.n}
        payload["aut_class"] = classify_c5_reseminant_aut(w)
    _emit(payload, args.pretty, f"{to_graph6(g)} regular={is_regular(g)}")
    return OK


def cmd_family(args) -> int:
    spec = CirculantSpec(args.n, args.k) if args.k else CirculantSpec.from_n(args.n)
    g = g_circulant(spec)
    payload = {
        "n": spec.n,
        "k": spec.k,
        "family_regime": spec.in_family_regime,
        "graph": graph_payload(g),
        "regular_degree": is_regular(g),
        "triangle_free": find_triangle(g) is None,
    }
    if not spec.in_family_regime:
        _emit(payload, args.pretty, f"G({spec.n},{spec.k}) outside the minimal regime")
        return OK
    coloring = block_coloring(spec)
    mpg = complement(g)
    report = check_minimal_prime_graph(mpg)
    payload["coloring"] = list(coloring.colors)
    payload["complement"] = graph_payload(mpg)
    payload["minimal"] = report.is_minimal
    payload["report"] = report.to_dict()
    payload["base"] = is_base_graph(mpg)
    if args.super_base and report.is_minimal:
        payload["super_base"] = super_base_report(mpg, require_minimal=False).is_super_base
    ok = report.is_minimal and payload["base"]
    _emit(payload, args.pretty,
          f"G({spec.n},{spec.k}): complement minimal={report.is_minimal} base={payload['base']}")
    return OK if ok else NEGATIVE


def cmd_product(args) -> int:
    a = _load_one(args.left).graph
    b = _load_one(args.right).graph
    g = product(ProductKind(args.kind), a, b)
    payload = {"kind": args.kind, "graph": graph_payload(g),
               "is_solvable": is_solvable_prime_graph(g)}
    if args.minimal:
        payload["report"] = check_minimal_prime_graph(g).to_dict()
    _emit(payload, args.pretty, f"{args.kind}: n={g.n} m={g.num_edges}")
    return OK


def cmd_aut(args) -> int:
    entry = _load_one(args.graph)
    report = decompose_aut(entry.graph, args.limit)
    payload = report.to_dict()
    payload["quotient_has_reflection"] = quotient_has_reflection(report)
    _emit(payload, args.pretty,
          f"|Aut|={report.order} kernel={report.kernel_order} quotient={report.quotient_order}")
    return OK


def cmd_sites(args) -> int:
    entry = _load_one(args.graph)
    g = entry.graph
    out = []
    for site in enumerate_generation_sites(g, args.limit):
        cls = classify_site(g, site.site, check_site=False)
        two, clique = lemma_checks(g, site.site)
        out.append({"site": list(site.site), "kind": cls.kind,
                    "generated_graph6": to_graph6(site.generated),
                    "lemma_two_colorable": two, "lemma_clique": clique})
    _emit(out, args.pretty, "\n".join(f"{s['site']} {s['kind']}" for s in out))
    return OK


def cmd_superbase(args) -> int:
    entry = _load_one(args.graph)
    report = super_base_report(entry.graph)
    _emit(report.to_dict(), args.pretty, f"super_base={report.is_super_base}")
    return OK if report.is_super_base else NEGATIVE


def cmd_catalog(args) -> int:
    if args.action == "list":
        entries = builtin_fixtures()
        payload = [{"name": e.name, "n": e.graph.n, "m": e.graph.num_edges,
                    "provenance": e.provenance, "tags": list(e.tags)} for e in entries]
        _emit(payload, args.pretty,
              "\n".join(f"{e.name:10s} n={e.graph.n:<3d} {','.join(e.tags)}" for e in entries))
        return OK
    if args.action == "show":
        if not args.name:
            raise UsageError("catalog show needs a name")
        try:
            e = fixture(args.name)
        except KeyError:
            raise UsageError(f"unknown fixture {args.name!r}") from None
        payload = {"name": e.name, "provenance": e.provenance, "tags": list(e.tags),
                   "labels": list(e.labels) if e.labels else None, **graph_payload(e.graph)}
        _emit(payload, args.pretty, f"{e.name}: {to_graph6(e.graph)}")
        return OK
    if args.action == "export":
        if not args.name:
            raise UsageError("catalog export needs a directory")
        entries = builtin_fixtures() + [circulant_entry(n) for n in args.family]
        save_catalog(entries, args.name)
        _emit({"directory": str(Path(args.name)), "count": len(entries)}, args.pretty,
              f"wrote {len(entries)} entries to {args.name}")
        return OK
    raise UsageError(f"unknown catalog action {args.action!r}")


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="primegraph", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="minimality report")
    p.add_argument("graph", help="graph6 file, JSON edge list, or fixture name")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("duplicate", parents=[common], help="vertex duplication")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=cmd_duplicate)

    p = sub.add_parser("reseminant", parents=[common], help="build from multiplicities")
    p.add_argument("--w", required=True, help="comma-separated multiplicities")
    p.add_argument("--base", help="base graph (default C5)")
    p.set_defaults(func=cmd_reseminant)

    p = sub.add_parser("family", parents=[common], help="circulant family bundle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--super-base", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("product", parents=[common], help="graph products")
    p.add_argument("--kind", required=True, choices=[k.value for k in ProductKind])
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--minimal", action="store_true", help="also run the minimality check")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("aut", parents=[common], help="automorphism decomposition")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=16)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("sites", parents=[common], help="generation-site census")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_sites)

    p = sub.add_parser("superbase", parents=[common], help="super base graph check")
    p.add_argument("graph")
    p.set_defaults(func=cmd_superbase)

    p = sub.add_parser("catalog", parents=[common], help="builtin fixtures")
    p.add_argument("action", choices=["list", "show", "export"])
    p.add_argument("name", nargs="?", help="fixture name (show) or directory (export)")
    p.add_argument("--family", type=int, nargs="*", default=[],
                   help="circulant orders to include in an export")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, CatalogError, GraphError, OSError, ValueError) as exc:
        print(f"primegraph {args.command}: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
