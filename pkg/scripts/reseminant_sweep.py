"""Regularity, degree model and automorphism quotient for every C5-reseminant
graph with a bounded number of duplications."""

from __future__ import annotations

import argparse
import json
from collections import Counter

from primegraph.experiments import ReseminantSweepConfig, config_dict, reseminant_sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-total", type=int, default=5)
    parser.add_argument("--no-aut", action="store_true")
    parser.add_argument("--out", help="write rows as JSON here")
    args = parser.parse_args()
    cfg = ReseminantSweepConfig(max_total=args.max_total, with_automorphisms=not args.no_aut)
    rows = reseminant_sweep(cfg)
    regular = sorted({(r["regular_degree"], r["n"]) for r in rows if r["regular_degree"]})
    mism = [r["w"] for r in rows if "quotient_order" in r and r["quotient_order"] != {
        "D5-quotient": 10, "Z2-quotient": 2, "kernel-only": 1}[r["predicted_aut"]]]
    print(f"config: {config_dict(cfg)}")
    print(f"vectors: {len(rows)}; regular (k, n): {regular}")
    print(f"degree model matches: {all(r['degrees_match'] for r in rows)}")
    print(f"predicted quotient types: {dict(Counter(r['predicted_aut'] for r in rows))}")
    print(f"quotient-order mismatches: {mism}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": config_dict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
