"""Run every identity sweep up to a maximum n and print a pass/fail grid.

    python scripts/run_sweeps.py --max-n 10
"""
import argparse
import time

from jmkit.identities import IDENTITIES, sweep


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    print("n   " + " ".join(f"{name:>11}" for name in IDENTITIES) + "    seconds")
    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        records = sweep(n, IDENTITIES, jobs=args.jobs)
        cells = []
        for name in IDENTITIES:
            mine = [r for r in records if r.identity == name]
            bad = sum(not r.ok for r in mine)
            cells.append(f"{len(mine) - bad}/{len(mine)}" if mine else "-")
        print(f"{n:<3} " + " ".join(f"{c:>11}" for c in cells)
              + f"   {time.perf_counter() - start:8.2f}")


if __name__ == "__main__":
    main()
