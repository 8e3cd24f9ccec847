"""Budgeted search for balanced zero-sum arrays on composite n-tori, every
window side k = 2..n-1. Prints one status line per (n, k).

    python3 scripts/composite_probe.py --n 4 6 --budget 200000
"""

import argparse
import time

from tomofix.balanced import ProbeConfig, composite_probe


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 6])
    ap.add_argument("--budget", type=int, default=200_000)
    ap.add_argument("--all", action="store_true", help="enumerate every solution instead of stopping at one")
    args = ap.parse_args()
    for n in args.n:
        for k in range(2, n):
            start = time.perf_counter()
            rep = composite_probe(ProbeConfig(n, k, args.budget, None if args.all else 1))
            dt = time.perf_counter() - start
            print(f"n={n} k={k} status={rep.status} complete={rep.complete} solutions={len(rep.solutions)} nodes={rep.nodes} ({dt:.2f} s)")


if __name__ == "__main__":
    main()
