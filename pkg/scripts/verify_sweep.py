"""Time the p(n) identity sweep over larger ranges of n.

    python scripts/verify_sweep.py --to 60 --jobs 4
"""

import argparse
import time

from partition_lab.identity import verify_range


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--to", type=int, default=40)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = verify_range(args.to, jobs=args.jobs)
    dt = time.perf_counter() - t0
    bad = [r.n for r in reports if not r.match]
    for r in reports[-5:]:
        print(f"n={r.n:3d} p(n)={r.lhs} distinct m={len(r.per_m)} max m={max(r.per_m, default=0)}")
    print(f"{len(reports)} values of n in {dt:.2f}s, mismatches: {bad or 'none'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
