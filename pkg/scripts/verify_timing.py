"""Time every row of the verification matrix and compare worker counts.

Usage: python3 scripts/verify_timing.py [--workers 1,2,4]
"""
import argparse
import time

from cambrep.verify import run_matrix


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workers", default="1,2,4")
    parser.add_argument("--slowest", type=int, default=8)
    args = parser.parse_args()
    for w in (int(x) for x in args.workers.split(",")):
        start = time.perf_counter()
        results = run_matrix(workers=w)
        wall = time.perf_counter() - start
        ok = sum(r.ok for r in results)
        print(f"workers={w}: {ok}/{len(results)} rows match in {wall:.2f}s")
    for r in sorted(results, key=lambda r: -r.seconds)[:args.slowest]:
        print("  " + r.line())


if __name__ == "__main__":
    main()
