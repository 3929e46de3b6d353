"""Reproducible sweeps behind the scripts in ``scripts/``.

Each experiment takes a frozen dataclass config and returns plain
JSON-serialisable rows, so results can be diffed across runs.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from itertools import product

from .automorphism import classify_c5_reseminant_aut, measure_c5_reseminant_aut
from .catalog import builtin_fixtures, fixture
from .circulant import CirculantSpec, g_circulant, super_base_report
from .generation import classify_site, enumerate_generation_sites, lemma_checks
from .graph import complement, is_regular
from .reseminant import C5, build_reseminant, class_degrees, degree_vector
from .verify import check_minimal_prime_graph


@dataclass(frozen=True)
class ReseminantSweepConfig:
    max_total: int = 5
    with_automorphisms: bool = True
    aut_max_vertices: int = 12


@dataclass(frozen=True)
class FamilyCensusConfig:
    max_n: int = 60
    super_base: bool = True


@dataclass(frozen=True)
class SiteCensusConfig:
    fixtures: tuple[str, ...] = field(
        default_factory=lambda: tuple(e.name for e in builtin_fixtures())
    )


def reseminant_sweep(cfg: ReseminantSweepConfig) -> list[dict]:
    """Every C5 multiplicity vector with total at most ``max_total``."""
    rows = []
    for w in product(range(cfg.max_total + 1), repeat=5):
        if sum(w) > cfg.max_total:
            continue
        g = build_reseminant(C5, w)
        row = {
            "w": list(w),
            "n": g.n,
            "regular_degree": is_regular(g),
            "degree_vector": degree_vector(w),
            "degrees_match": degree_vector(w) == class_degrees(g),
            "predicted_aut": classify_c5_reseminant_aut(w),
        }
        if cfg.with_automorphisms and g.n <= cfg.aut_max_vertices:
            r = measure_c5_reseminant_aut(w, limit=cfg.aut_max_vertices)
            row.update(aut_order=r.order, kernel_order=r.kernel_order,
                       quotient_order=r.quotient_order)
        rows.append(row)
    return rows


def family_census(cfg: FamilyCensusConfig) -> list[dict]:
    """Minimality, base and super-base status across the circulant family."""
    rows = []
    for n in range(5, cfg.max_n + 1):
        if n % 6 not in (0, 5):
            continue
        spec = CirculantSpec.from_n(n)
        t = time.perf_counter()
        mpg = complement(g_circulant(spec))
        report = check_minimal_prime_graph(mpg)
        row = {"n": n, "k": spec.k, "minimal": report.is_minimal,
               "failing_edge": list(report.failing_edge) if report.failing_edge else None}
        if cfg.super_base and report.is_minimal:
            row["super_base"] = super_base_report(mpg, require_minimal=False).is_super_base
        row["seconds"] = round(time.perf_counter() - t, 4)
        rows.append(row)
    return rows


def site_census(cfg: SiteCensusConfig) -> list[dict]:
    """Generation sites of each fixture with their classification."""
    rows = []
    for name in cfg.fixtures:
        g = fixture(name).graph
        t = time.perf_counter()
        sites = enumerate_generation_sites(g)
        kinds: dict[str, int] = {}
        lemma_ok = True
        for s in sites:
            kind = classify_site(g, s.site, check_site=False).kind
            kinds[kind] = kinds.get(kind, 0) + 1
            lemma_ok &= all(lemma_checks(g, s.site))
        rows.append({"name": name, "n": g.n, "sites": len(sites), "kinds": kinds,
                     "lemma_flags_hold": lemma_ok,
                     "seconds": round(time.perf_counter() - t, 4)})
    return rows


def config_dict(cfg) -> dict:
    return asdict(cfg)
