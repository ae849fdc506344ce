"""Count shades, shadows and essential shadows per size, with timings.

    python3 scripts/run_counts.py --max-n 6 --prune --workers 8 --out counts.csv

``--compare-unpruned`` repeats each enumeration without prefix pruning and
checks the two sequences are identical (slow at n = 6: a few minutes).
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from pshadows.cli import classify_all, validate
from pshadows.enumerator import EnumerationOptions, default_workers, enumerate_basic_shades


@dataclass(frozen=True)
class RunConfig:
    min_n: int = 1
    max_n: int = 6
    prune: bool = True
    workers: int = 1
    compare_unpruned: bool = False


def run(cfg: RunConfig) -> list[dict]:
    rows = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        t0 = time.perf_counter()
        shades = enumerate_basic_shades(EnumerationOptions(n=n, workers=cfg.workers, pruning=cfg.prune))
        t_enum = time.perf_counter() - t0
        t0 = time.perf_counter()
        recs = classify_all(shades, cfg.workers)
        t_class = time.perf_counter() - t0
        problems = validate(recs)
        row = {
            "n": n,
            "shades": len(shades),
            "shadows": sum(r.is_shadow for r in recs),
            "essential": sum(r.is_essential for r in recs),
            "self_opposite": sum(r.self_opposite for r in recs),
            "enumerate_s": round(t_enum, 2),
            "classify_s": round(t_class, 2),
            "valid": not problems,
        }
        if cfg.compare_unpruned:
            t0 = time.perf_counter()
            plain = enumerate_basic_shades(EnumerationOptions(n=n, workers=cfg.workers, pruning=not cfg.prune))
            row["unpruned_s" if cfg.prune else "pruned_s"] = round(time.perf_counter() - t0, 2)
            row["orders_agree"] = plain == shades
        print(row, file=sys.stderr, flush=True)
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--min-n", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--prune", action="store_true")
    ap.add_argument("--workers", type=int, default=default_workers())
    ap.add_argument("--compare-unpruned", action="store_true")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    cfg = RunConfig(args.min_n, args.max_n, args.prune, args.workers, args.compare_unpruned)
    rows = run(cfg)
    fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="", encoding="utf-8")
    with fh:
        w = csv.DictWriter(fh, fieldnames=list(rows[-1]))
        w.writeheader()
        w.writerows(rows)


if __name__ == "__main__":
    main()
