"""Worst-case sc(L^R) for binary R-trivial languages, one TSV row per n.

    python3 scripts/reproduce_table1.py --max-n 7 --jobs 4 --out-dir results/
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from porev.search import reproduce_table1


@dataclass(frozen=True)
class Table1Run:
    max_n: int = 6
    jobs: int = 1
    symmetry: str = "full"
    out_dir: Optional[Path] = None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=Table1Run.max_n)
    parser.add_argument("--jobs", type=int, default=Table1Run.jobs)
    parser.add_argument("--no-symmetry", action="store_true")
    parser.add_argument("--out-dir", type=Path)
    args = parser.parse_args(argv)
    run = Table1Run(args.max_n, args.jobs, "none" if args.no_symmetry else "full", args.out_dir)
    start = time.perf_counter()
    for n in range(2, run.max_n + 1):
        t = time.perf_counter()
        tsv = reproduce_table1(n, run.out_dir, run.jobs, run.symmetry, min_n=n)
        header, row = tsv.splitlines()
        if n == 2:
            print(header)
        print(row, flush=True)
        print(f"n={n}: {time.perf_counter() - t:.1f}s", file=sys.stderr)
    print(f"total {time.perf_counter() - start:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
