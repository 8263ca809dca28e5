"""Reverse state complexity of the witness families against their lower bounds."""

import argparse
import sys

from porev.automata import reverse_state_complexity, state_complexity
from porev.order import is_j_trivial
from porev.witnesses import fig2_witness, fig5_witness, table1_witness


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=16)
    args = parser.parse_args(argv)
    print("family\tn\tk\tsc\treverse_sc\ttarget\tj_trivial")
    for n in range(3, args.max_n + 1):
        d = fig2_witness(n)
        print(f"fig2\t{n}\t2\t{state_complexity(d)}\t{reverse_state_complexity(d)}\t{2 ** (n - 2)}\t{is_j_trivial(d)}")
    for n in range(3, min(args.max_n, 14) + 1):
        d = fig5_witness(n)
        print(f"fig5\t{n}\t{n - 2}\t{state_complexity(d)}\t{reverse_state_complexity(d)}\t{2 ** (n - 1) - 1}\t{is_j_trivial(d)}")
    for n in range(2, 8):
        d = table1_witness(n)
        print(f"table1\t{n}\t2\t{state_complexity(d)}\t{reverse_state_complexity(d)}\t-\t{is_j_trivial(d)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
