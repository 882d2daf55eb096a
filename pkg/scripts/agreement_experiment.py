#!/usr/bin/env python3
"""Cross-check the two gradation searches on random nilpotent algebras.

Generates 2-generated nilpotent tables (level-filtered, so nilpotency is
guaranteed by construction) and compares the exhaustive diagonal search
against the adapted-basis search on each.

Usage:
    python scripts/agreement_experiment.py [--count N] [--seed S] [--max-dim D]
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from nilalg import diagonal_search, two_generator_search
from oracles import random_nilpotent_algebra


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=50)
    parser.add_argument("--seed", type=int, default=101)
    parser.add_argument("--max-dim", type=int, default=6)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    verdicts = {"agree": 0, "disagree": 0}
    found = 0
    for _ in range(args.count):
        dim = rng.randint(3, args.max_dim)
        alg = random_nilpotent_algebra(rng, dim)
        diag = diagonal_search(alg)
        two = two_generator_search(alg, samples=2)
        same = diag.verdict == two.verdict
        verdicts["agree" if same else "disagree"] += 1
        if diag.verdict == "maximum_length":
            found += 1
        if not same:
            print(f"DISAGREE dim={dim}: diagonal={diag.verdict} "
                  f"two_generator={two.verdict}")
            print(f"  table: { {k: v for k, v in alg.brackets.items()} }")
    print(f"agree={verdicts['agree']} disagree={verdicts['disagree']} "
          f"(maximum-length instances: {found})")
    return 0 if verdicts["disagree"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
