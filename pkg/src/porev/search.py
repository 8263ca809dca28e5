"""Exhaustive search over minimal partially ordered DFAs.

Every partially ordered DFA with all states reachable can be renumbered so
that transitions never decrease a state number and the initial state is 0.
Enumerating such monotone tables together with every acceptance mask
therefore covers every R-trivial language of the given state complexity,
some of them several times.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterator, Literal, Optional

import numpy as np

from . import _kernel
from .automata import Dfa, build_dfa, dead_states, is_minimal, reverse_state_complexity
from .io import dfa_from_dict, dfa_to_dict
from .order import trahtman_condition

ClassFilter = Literal["r-trivial", "j-trivial"]
DeadMode = Literal["require", "forbid", "any"]
Symmetry = Literal["full", "none"]

MAX_N = 12
MAX_K = 4
DEAD_MODES: tuple[DeadMode, ...] = ("any", "require", "forbid")
_MODE_ROW = {"any": _kernel.ANY, "require": _kernel.REQUIRE, "forbid": _kernel.FORBID}


class SearchGuardError(ValueError):
    pass


def _check_guard(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N or not 1 <= k <= MAX_K:
        raise SearchGuardError(f"search supports 1 <= n <= {MAX_N} and 1 <= k <= {MAX_K}, got n={n}, k={k}")


def table_count(n: int, k: int) -> int:
    return math.prod((n - i) ** k for i in range(n))


def candidate_count(n: int, k: int) -> int:
    """Closed form for the number of (table, mask) candidates."""
    return table_count(n, k) * 2**n


def enumerate_po_dfas(n: int, k: int) -> Iterator[Dfa]:
    """Yield every monotone complete DFA with initial state 0, in (table, mask) order."""
    _check_guard(n, k)
    ranges = [range(i, n) for i in range(n) for _ in range(k)]
    for flat in itertools.product(*ranges):
        rows = [flat[i * k:(i + 1) * k] for i in range(n)]
        for mask in range(2**n):
            yield build_dfa(n, k, rows, 0, mask)


def decode_table(index: int, n: int, k: int) -> list[list[int]]:
    delta = np.zeros((n, k), dtype=np.int64)
    _kernel.decode(index, n, k, delta)
    return delta.tolist()


def encode_table(delta, n: int, k: int) -> int:
    return int(_kernel.encode(np.asarray(delta, dtype=np.int64), n, k, _kernel.weights(n, k)))


@dataclass(frozen=True)
class CandidateCursor:
    """A contiguous slice of the enumeration: table indices in ``[lo, hi)``.

    Slices are cut on prefixes of the first ``fixed_entries`` table entries,
    so each one fixes the leading rows of the transition table.
    """

    n: int
    k: int
    lo: int
    hi: int
    fixed_entries: int = 0

    @property
    def candidate_count(self) -> int:
        return (self.hi - self.lo) * 2**self.n

    def candidates(self) -> Iterator[Dfa]:
        for index in range(self.lo, self.hi):
            rows = decode_table(index, self.n, self.k)
            for mask in range(2**self.n):
                yield build_dfa(self.n, self.k, rows, 0, mask)


def partition_workload(n: int, k: int, parts: int) -> list[CandidateCursor]:
    """Split the enumeration into at most ``parts`` disjoint cursors covering it."""
    _check_guard(n, k)
    if parts < 1:
        raise ValueError("parts must be at least 1")
    total = table_count(n, k)
    if parts == 1:
        return [CandidateCursor(n, k, 0, total, 0)]
    w = _kernel.weights(n, k)
    depth = 0
    while depth < n * k and total // int(w[depth]) < parts:
        depth += 1
    block = int(w[depth]) if depth < n * k else 1
    prefixes = total // block
    cursors = []
    for p in range(parts):
        start = prefixes * p // parts
        stop = prefixes * (p + 1) // parts
        if stop > start:
            cursors.append(CandidateCursor(n, k, start * block, stop * block, depth + 1))
    return cursors


@dataclass(frozen=True)
class SearchRecord:
    n: int
    k: int
    class_filter: ClassFilter
    dead_mode: DeadMode
    max_reverse_sc: int
    witness: Optional[Dfa]
    candidates_scanned: int
    minimal_count: int
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "n": self.n,
            "k": self.k,
            "class": self.class_filter,
            "dead": self.dead_mode,
            "max_reverse_sc": self.max_reverse_sc,
            "witness": dfa_to_dict(self.witness) if self.witness is not None else None,
            "candidates_scanned": self.candidates_scanned,
            "minimal_count": self.minimal_count,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SearchRecord":
        w = data.get("witness")
        return cls(
            data["n"],
            data["k"],
            data["class"],
            data["dead"],
            data["max_reverse_sc"],
            dfa_from_dict(w) if w is not None else None,
            data["candidates_scanned"],
            data["minimal_count"],
            data.get("wall_time", 0.0),
        )


def _perms(k: int, symmetry: Symmetry) -> np.ndarray:
    if symmetry == "none":
        return np.arange(k, dtype=np.int64).reshape(1, k)
    return np.array(list(itertools.permutations(range(k))), dtype=np.int64)


def _scan_cursor(args):
    cursor, jtrivial, symmetry = args
    return _kernel.scan(
        cursor.n, cursor.k, cursor.lo, cursor.hi, jtrivial, _perms(cursor.k, symmetry), symmetry == "full"
    )


def _merge(results) -> tuple[np.ndarray, np.ndarray]:
    best = np.full((3, 3), -1, dtype=np.int64)
    counts = np.zeros(4, dtype=np.int64)
    for b, c in results:
        counts += c
        for mode in range(3):
            if b[mode, 0] >= 0:
                _kernel._offer(best, mode, b[mode, 0], b[mode, 1], b[mode, 2])
    return best, counts


def scan_all_modes(
    n: int,
    k: int,
    class_filter: ClassFilter = "r-trivial",
    symmetry: Symmetry = "full",
    jobs: int = 1,
    parts: Optional[int] = None,
) -> dict[DeadMode, SearchRecord]:
    """One pass over the enumeration yielding a record for every dead-state mode."""
    _check_guard(n, k)
    if class_filter not in ("r-trivial", "j-trivial"):
        raise ValueError(f"unknown class filter {class_filter!r}")
    if symmetry not in ("full", "none"):
        raise ValueError(f"unknown symmetry setting {symmetry!r}")
    start = time.perf_counter()
    cursors = partition_workload(n, k, parts or max(1, jobs))
    work = [(c, class_filter == "j-trivial", symmetry) for c in cursors]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_cursor, work))
    else:
        results = [_scan_cursor(w) for w in work]
    best, counts = _merge(results)
    elapsed = time.perf_counter() - start
    records = {}
    for mode in DEAD_MODES:
        value, tindex, mask = (int(x) for x in best[_MODE_ROW[mode]])
        witness = None
        if value >= 0:
            witness = build_dfa(n, k, decode_table(tindex, n, k), 0, mask)
        records[mode] = SearchRecord(
            n,
            k,
            class_filter,
            mode,
            max(value, 0),
            witness,
            int(counts[0]),
            int(counts[1 + _MODE_ROW[mode]]),
            elapsed,
        )
    return records


def worst_case_reverse(
    n: int,
    k: int,
    class_filter: ClassFilter = "r-trivial",
    dead_mode: DeadMode = "any",
    symmetry: Symmetry = "full",
    jobs: int = 1,
    parts: Optional[int] = None,
) -> SearchRecord:
    """Largest sc(L^R) over minimal monotone DFAs passing the filters.

    Ties go to the lexicographically least (table, mask) encoding.
    """
    if dead_mode not in DEAD_MODES:
        raise ValueError(f"unknown dead-state mode {dead_mode!r}")
    return scan_all_modes(n, k, class_filter, symmetry, jobs, parts)[dead_mode]


def worst_case_reverse_reference(
    n: int, k: int, class_filter: ClassFilter = "r-trivial", dead_mode: DeadMode = "any"
) -> SearchRecord:
    """Same contract as :func:`worst_case_reverse`, computed with the pure-Python
    automata operations.  Only practical for tiny n."""
    _check_guard(n, k)
    best = -1
    witness = None
    scanned = matched = 0
    for dfa in enumerate_po_dfas(n, k):
        scanned += 1
        if not is_minimal(dfa):
            continue
        if class_filter == "j-trivial" and not trahtman_condition(dfa):
            continue
        has_dead = dead_states(dfa) != 0
        if (dead_mode == "require" and not has_dead) or (dead_mode == "forbid" and has_dead):
            continue
        matched += 1
        value = reverse_state_complexity(dfa)
        if value > best:
            best, witness = value, dfa
    return SearchRecord(n, k, class_filter, dead_mode, max(best, 0), witness, scanned, matched)


def verify_record(record: SearchRecord) -> bool:
    """Re-check that the witness passes the record's filters and attains its maximum."""
    w = record.witness
    if w is None:
        return record.minimal_count == 0
    if w.state_count != record.n or w.alphabet_size != record.k or not is_minimal(w):
        return False
    if record.class_filter == "j-trivial" and not trahtman_condition(w):
        return False
    has_dead = dead_states(w) != 0
    if record.dead_mode == "require" and not has_dead:
        return False
    if record.dead_mode == "forbid" and has_dead:
        return False
    return reverse_state_complexity(w) == record.max_reverse_sc


TSV_HEADER = ("n", "worst_no_dead", "worst_with_dead", "upper_bound", "lower_bound", "witness_path")


def reproduce_table1(
    max_n: int = 6,
    out_dir: Optional[Path] = None,
    jobs: int = 1,
    symmetry: Symmetry = "full",
    min_n: int = 2,
) -> str:
    """Binary R-trivial worst cases for n = min_n..max_n as TSV text.

    When ``out_dir`` is given, each row's two records are written to
    ``table1_n{n}.json`` there and the row references that file name.
    """
    lines = ["\t".join(TSV_HEADER)]
    for n in range(min_n, max_n + 1):
        records = scan_all_modes(n, 2, "r-trivial", symmetry, jobs)
        path = f"table1_n{n}.json"
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)
            payload = {mode: records[mode].to_dict() for mode in ("forbid", "require")}
            (out_dir / path).write_text(json.dumps(payload, indent=2) + "\n")
        lines.append(
            "\t".join(
                str(x)
                for x in (
                    n,
                    records["forbid"].max_reverse_sc,
                    records["require"].max_reverse_sc,
                    2 ** (n - 2) + n - 1,
                    2 ** (n - 2),
                    path if out_dir is not None else "-",
                )
            )
        )
    return "\n".join(lines) + "\n"
