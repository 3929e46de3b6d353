"""Minimal / super-base status of the complements of the circulant family."""

from __future__ import annotations

import argparse
import json

from primegraph.experiments import FamilyCensusConfig, config_dict, family_census


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=60)
    parser.add_argument("--no-super-base", action="store_true")
    parser.add_argument("--out")
    args = parser.parse_args()
    cfg = FamilyCensusConfig(max_n=args.max_n, super_base=not args.no_super_base)
    rows = family_census(cfg)
    print(f"config: {config_dict(cfg)}")
    print(f"{'n':>4} {'k':>3} {'minimal':>8} {'super':>6} {'secs':>8}  failing edge")
    for r in rows:
        print(f"{r['n']:>4} {r['k']:>3} {str(r['minimal']):>8} {str(r.get('super_base', '-')):>6} "
              f"{r['seconds']:>8.3f}  {r['failing_edge'] or ''}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": config_dict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
