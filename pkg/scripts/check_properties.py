"""Structural property sweep over all monotone DFAs with n <= N states and k <= K letters.

The compiled route always covers every raw candidate.  The pure-Python route
covers one representative per language up to letter renaming and complement;
by default it samples every 8th representative at (5, 3), --full removes that.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from porev.properties import distinct_representatives, kernel_scan, library_scan


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 5
    max_k: int = 3
    full: bool = False

    def stride(self, n: int, k: int) -> int:
        return 1 if self.full or (n, k) != (5, 3) else 8


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    parser.add_argument("--max-k", type=int, default=SweepConfig.max_k)
    parser.add_argument("--full", action="store_true", help="no sampling on the Python route")
    args = parser.parse_args(argv)
    config = SweepConfig(args.max_n, args.max_k, args.full)
    failures = 0
    for n in range(1, config.max_n + 1):
        for k in range(1, config.max_k + 1):
            t = time.perf_counter()
            results = kernel_scan(n, k)
            reps = distinct_representatives(n, k, config.stride(n, k))
            results += list(library_scan(reps).values())
            failures += sum(r.violations for r in results)
            print(f"n={n} k={k} representatives={len(reps)} ({time.perf_counter() - t:.1f}s)")
            for r in results:
                print("  " + r.describe(), flush=True)
    print(f"{failures} violations")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
