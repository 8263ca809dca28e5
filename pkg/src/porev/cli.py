"""Command-line entry point: ``porev <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 invalid input, 3 internal
invariant violation (the offending automaton is written to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .automata import AutomatonError, Dfa, is_minimal, reverse_state_complexity, state_complexity
from .io import dfa_from_dot, dfa_from_json, dfa_to_dict, dfa_to_dot, dfa_to_json
from .order import J_METHODS, MAX_SIMON_LETTERS, is_j_trivial, is_partially_ordered, is_r_trivial
from .regex import RegexSyntaxError, regex_to_min_dfa
from .search import (
    TSV_HEADER,
    SearchGuardError,
    reproduce_table1,
    scan_all_modes,
    verify_record,
)
from .witnesses import fig2_witness, fig5_witness, jtrivial_alphabet_bound, table1_witness, theorem1_bound

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InvariantViolation(Exception):
    def __init__(self, message: str, dfa: Optional[Dfa] = None):
        super().__init__(message)
        self.dfa = dfa


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_automaton(path: str) -> Dfa:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise AutomatonError(f"cannot read {path}: {exc}") from exc
    # DOT may be preceded by // comment lines carrying measurements
    body = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("//")]
    if body and body[0].lstrip().startswith("digraph"):
        return dfa_from_dot(text)
    return dfa_from_json(text)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _render(dfa: Dfa, fmt: str, extra: dict) -> str:
    if fmt == "json":
        return json.dumps({"automaton": dfa_to_dict(dfa), **extra}, indent=2) + "\n"
    if fmt == "dot":
        notes = "".join(f"// {key}: {value}\n" for key, value in extra.items())
        return notes + dfa_to_dot(dfa)
    return "".join(f"{key}: {value}\n" for key, value in extra.items())


def cmd_classify(args) -> int:
    dfa = _read_automaton(args.automaton)
    report = {
        "states": dfa.state_count,
        "minimal": is_minimal(dfa),
        "sc": state_complexity(dfa),
        "reverse_sc": reverse_state_complexity(dfa),
        "partially_ordered": is_partially_ordered(dfa),
        "r_trivial": is_r_trivial(dfa),
    }
    methods = [m for m in J_METHODS if m != "simon" or dfa.alphabet_size <= MAX_SIMON_LETTERS]
    verdicts = {m: is_j_trivial(dfa, m) for m in methods}
    for m, v in verdicts.items():
        report[f"j_trivial[{m}]"] = v
    if len(set(verdicts.values())) > 1:
        raise InvariantViolation(f"J-triviality methods disagree: {verdicts}", dfa)
    report["j_trivial"] = verdicts["reverse-po"]
    if args.format == "json":
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        for key, value in report.items():
            if isinstance(value, bool):
                value = "yes" if value else "no"
            sys.stdout.write(f"{key}: {value}\n")
    return EXIT_OK


_FAMILIES = {"fig2": fig2_witness, "fig5": fig5_witness, "table1": table1_witness}


def cmd_witness(args) -> int:
    dfa = _FAMILIES[args.family](args.n)
    extra = {"sc": state_complexity(dfa), "reverse_sc": reverse_state_complexity(dfa)}
    _emit(_render(dfa, args.format, extra), args.output)
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.family == "r":
        value: Optional[int] = theorem1_bound(args.n, args.k)
    else:
        value = jtrivial_alphabet_bound(args.n, args.k)
    sys.stdout.write(("unknown" if value is None else str(value)) + "\n")
    return EXIT_OK


def cmd_regex(args) -> int:
    alphabet = [a for a in args.alphabet.split(",") if a]
    dfa = regex_to_min_dfa(args.expression, alphabet)
    extra = {"sc": dfa.state_count, "reverse_sc": reverse_state_complexity(dfa)}
    _emit(_render(dfa, args.format, extra), args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    class_filter = "r-trivial" if args.cls == "r" else "j-trivial"
    symmetry = "none" if args.no_symmetry else "full"
    records = scan_all_modes(args.n, args.k, class_filter, symmetry, args.jobs)
    record = records[args.dead]
    if not verify_record(record):
        raise InvariantViolation("search witness failed re-verification", record.witness)
    sys.stdout.write(record.to_json() + "\n")
    sys.stderr.write(f"wall time {record.wall_time:.2f}s\n")
    witness_path = "-"
    if args.witness_out and record.witness is not None:
        Path(args.witness_out).write_text(dfa_to_json(record.witness) + "\n")
        witness_path = args.witness_out
    if args.tsv:
        tsv = Path(args.tsv)
        header = not tsv.exists() or tsv.stat().st_size == 0
        row = (
            args.n,
            records["forbid"].max_reverse_sc,
            records["require"].max_reverse_sc,
            2 ** (args.n - 2) + args.n - 1 if args.n >= 2 else 1,
            2 ** (args.n - 2) if args.n >= 2 else 1,
            witness_path,
        )
        with tsv.open("a") as fh:
            if header:
                fh.write("\t".join(TSV_HEADER) + "\n")
            fh.write("\t".join(str(x) for x in row) + "\n")
    return EXIT_OK


def cmd_convert(args) -> int:
    dfa = _read_automaton(args.input)
    target = args.to
    if target is None:
        if args.output and args.output.endswith(".dot"):
            target = "dot"
        elif args.output and args.output.endswith(".json"):
            target = "json"
        else:
            raise UsageError("cannot infer the output format; pass --to json|dot")
    text = dfa_to_dot(dfa) if target == "dot" else dfa_to_json(dfa) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_reproduce(args) -> int:
    if args.max_n < 2:
        raise UsageError("--max-n must be at least 2")
    out_dir = Path(args.out_dir) if args.out_dir else None
    text = reproduce_table1(args.max_n, out_dir, args.jobs, "none" if args.no_symmetry else "full")
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="porev", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="state complexities and R-/J-triviality of an automaton")
    p.add_argument("automaton", help="JSON or DOT file, or - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="emit a witness automaton")
    p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("bound", help="closed-form bound on sc(L^R)")
    p.add_argument("--family", choices=("r", "j"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("regex", help="compile an expression to its minimal DFA")
    p.add_argument("expression")
    p.add_argument("--alphabet", default="a,b", help="comma-separated letter names")
    p.add_argument("--format", choices=("json", "dot", "text"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_regex)

    p = sub.add_parser("search", help="exhaustive worst case over minimal partially ordered DFAs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--class", dest="cls", choices=("r", "j"), default="r")
    p.add_argument("--dead", choices=("require", "forbid", "any"), default="any")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("--tsv", help="append a Table-1-shaped row to this file")
    p.add_argument("--witness-out", help="write the witness automaton JSON here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("convert", help="transcode an automaton between JSON and DOT")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--to", choices=("json", "dot"))
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("reproduce-table1", help="worst-case table for binary R-trivial languages")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", help="write per-row witness records here")
    p.add_argument("--no-symmetry", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (AutomatonError, RegexSyntaxError, SearchGuardError, ValueError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INPUT
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        if exc.dfa is not None:
            sys.stderr.write(dfa_to_json(exc.dfa) + "\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
