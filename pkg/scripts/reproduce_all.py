#!/usr/bin/env python3
"""Run every theorem pipeline and write the JSON reports.

Usage:
    python scripts/reproduce_all.py [--out-dir reports] [--seed S]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from nilalg.cli import THEOREM_PIPELINES, run_pipeline
from nilalg.invariants import DEFAULT_SEED


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="reports")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for theorem in sorted(THEOREM_PIPELINES):
        code, report = run_pipeline(theorem, seed=args.seed)
        path = out_dir / f"{theorem}.json"
        path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
        for record in report["instances"]:
            mark = "ok" if record["match"] else "MISMATCH"
            print(f"{theorem}  {record['name']:28s} {record['verdict']:22s} {mark}")
        worst = max(worst, code)
    print(f"reports written to {out_dir}/")
    return worst


if __name__ == "__main__":
    sys.exit(main())
