#!/usr/bin/env python3
"""Generate the full sign-verification ledgers for type B at ranks 2 and 3.

Writes one JSON report per (rank, case) into the output directory and prints
a one-line summary per run.  Reports are byte-stable for a fixed seed.

Usage:
    python scripts/sign_ledger.py [--out-dir reports] [--p 7] [--seed 0]
"""

import argparse
import json
import pathlib
import sys
import time

from modlie.chevalley import build_chevalley
from modlie.leebasis import verification_report
from modlie.roots import build_root_system


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--out-dir", default="reports")
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    for rank in (2, 3):
        L = build_chevalley(build_root_system("B", rank), args.p)
        for case in ("I", "II"):
            t0 = time.time()
            doc = verification_report(L, case, seed=args.seed)
            path = out_dir / f"lee_B{rank}_case{case}_p{args.p}.json"
            path.write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
            s = doc["summary"]
            print(
                f"B{rank} case {case:>2} p={args.p}: solved {s['solved']}/{s['slots']},"
                f" nosolution {s['nosolution']}, impossible {s['impossible_for_rank']},"
                f" oracle={s['rep_oracle']}"
                f" ({'consistent' if s['oracle_consistent'] else 'INCONSISTENT'})"
                f"  [{time.time()-t0:.1f}s] -> {path}"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
