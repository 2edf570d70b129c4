#!/usr/bin/env python3
"""Regenerate the frozen brute-force snapshots.

Runs the exhaustive search for every snapshot point and writes
``brute_snapshots.json`` next to this script.  With ``--validate`` the
labeled free-graph counts are cross-checked against a direct filter of
all 2^C(n,2) labeled graphs: with the independent subset-enumeration
oracles up to n = 5, and with the package freeness check (itself
oracle-tested separately) for n = 6, 7 where the subset oracles are too
slow.  Snapshot floats are stored at full repr precision and compared
bit-exactly by the acceptance suite.

Usage: python generate_snapshots.py [--validate]
"""

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path

from specforest import ForbiddenFamily, brute_force_extremal, is_free, make_graph

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
from oracles import oracle_free  # noqa: E402

POINTS = [(n, 2, 3) for n in range(4, 8)] + [(n, 3, 4) for n in range(4, 8)]


def direct_filter_count(n: int, k: int, s: int) -> int:
    pairs = list(combinations(range(n), 2))
    count = 0
    use_oracle = n <= 5
    fam = ForbiddenFamily(k, s)
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = make_graph(n, edges)
        if use_oracle:
            count += oracle_free(g, k, s)
        else:
            count += bool(is_free(g, fam))
    return count


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--validate", action="store_true")
    args = parser.parse_args()

    snapshots = []
    for n, k, s in POINTS:
        report = brute_force_extremal(n, ForbiddenFamily(k, s))
        entry = {
            "n": n,
            "k": k,
            "s": s,
            "count_free": report.count_free,
            "best_rho": report.best_rho,
            "argmax": list(report.argmax),
            "candidate_rho": report.candidate_rho,
            "verdict": report.verdict,
        }
        if args.validate:
            expected = direct_filter_count(n, k, s)
            status = "ok" if expected == report.count_free else "MISMATCH"
            print(f"validate (n={n},k={k},s={s}): direct filter {expected} "
                  f"vs enumeration {report.count_free} -> {status}")
            if expected != report.count_free:
                return 1
        snapshots.append(entry)
        print(f"(n={n},k={k},s={s}): count={report.count_free} "
              f"best={report.best_rho!r} verdict={report.verdict}")

    out = Path(__file__).resolve().parent / "brute_snapshots.json"
    out.write_text(json.dumps({"schema": 1, "snapshots": snapshots}, indent=2) + "\n")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
