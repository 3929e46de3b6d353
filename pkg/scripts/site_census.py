"""Generation-site census of the builtin fixtures, by site kind."""

from __future__ import annotations

import argparse
import json

from primegraph.experiments import SiteCensusConfig, config_dict, site_census


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("names", nargs="*", help="fixture names (default: all builtins)")
    parser.add_argument("--out")
    args = parser.parse_args()
    cfg = SiteCensusConfig(tuple(args.names)) if args.names else SiteCensusConfig()
    rows = site_census(cfg)
    for r in rows:
        print(f"{r['name']:>9} n={r['n']:<3} sites={r['sites']:<4} {r['kinds']} "
              f"lemmas={r['lemma_flags_hold']} ({r['seconds']:.2f}s)")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": config_dict(cfg), "rows": rows}, fh, indent=1)


if __name__ == "__main__":
    main()
