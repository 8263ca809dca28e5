"""Structural properties checked over whole enumerations and the witness families.

Two independent routes: the compiled scan in :mod:`porev._kernel` walks
every raw candidate, and :func:`library_violations` re-derives the same
facts with the pure-Python operations on one representative per language
(up to letter renaming and complement).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernel
from .automata import (
    Dfa,
    build_dfa,
    complement,
    determinize,
    is_minimal,
    minimize,
    reverse,
    reverse_state_complexity,
)
from .io import dfa_to_json
from .order import (
    J_METHODS,
    is_j_trivial,
    is_r_trivial,
    reachability_order,
    simon_condition,
)
from .search import decode_table
from .witnesses import corollary3_bound

LETTER_REMOVAL_MAX_LETTERS = 6

# order follows the slot numbering in _kernel
KERNEL_PROPERTIES = (
    "complement-duality",
    "unary-stabilization",
    "three-way-agreement",
    "letter-removal-closure",
    "upper-bound",
    "subset-distinguishability",
)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checked: int
    violations: int
    example: Optional[Dfa] = None

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def describe(self) -> str:
        line = f"{self.name}: {self.checked} checked, {self.violations} violations"
        if self.example is not None:
            line += f"; first offender {dfa_to_json(self.example)}"
        return line


def upper_bounds(n: int, k: int) -> tuple[int, int]:
    """(R-trivial, J-trivial) limits on the reverse subset count; -1 means unchecked."""
    if k != 2 or n < 2:
        return -1, -1
    r = 2 ** (n - 2) + n - 1
    j = corollary3_bound(n) if n >= 4 else -1
    return r, j


def kernel_scan(n: int, k: int) -> list[PropertyResult]:
    upper_r, upper_j = upper_bounds(n, k)
    checked, bad, first = _kernel.check_properties(n, k, 0, _kernel.table_count(n, k), upper_r, upper_j)
    out = []
    for slot, name in enumerate(KERNEL_PROPERTIES):
        example = None
        if bad[slot]:
            tindex, mask = (int(x) for x in first[slot])
            example = build_dfa(n, k, decode_table(tindex, n, k), 0, mask)
        out.append(PropertyResult(name, int(checked[slot]), int(bad[slot]), example))
    return out


def _decode_key(key: int, n: int, k: int) -> Dfa:
    size = 1 << n
    bits, code = key % size, key // size
    flat = []
    for _ in range(n * k):
        code, digit = divmod(code, n)
        flat.append(digit)
    flat.reverse()
    return build_dfa(n, k, [flat[i * k:(i + 1) * k] for i in range(n)], 0, bits)


def distinct_representatives(n: int, k: int, stride: int = 1) -> list[Dfa]:
    """One minimal DFA per R-trivial language with sc = n over k letters,
    up to letter renaming and complement, in canonical BFS numbering.

    ``stride`` keeps every stride-th representative of the sorted list.
    """
    perms = np.array(list(itertools.permutations(range(k))), dtype=np.int64)
    keys = np.unique(_kernel.canonical_keys(n, k, 0, _kernel.table_count(n, k), perms))
    return [_decode_key(int(key), n, k) for key in keys[::stride]]


def _drop_letters(dfa: Dfa, gamma: Iterable[int]) -> Dfa:
    keep = [a for a in range(dfa.alphabet_size) if a not in set(gamma)]
    delta = [[row[a] for a in keep] for row in dfa.delta]
    return build_dfa(dfa.state_count, len(keep), delta, dfa.initial, dfa.accepting)


def _unary_stable(dfa: Dfa) -> bool:
    rev = reverse(dfa)
    for a in range(dfa.alphabet_size):
        x = rev.initials
        for _ in range(dfa.state_count - 1):
            x = rev.image(x, a)
        if rev.image(x, a) != x:
            return False
    return True


def _letter_removal_holds(dfa: Dfa) -> bool:
    """Removing any proper nonempty letter subset keeps Simon's condition."""
    k = dfa.alphabet_size
    return all(
        simon_condition(_drop_letters(dfa, gamma))
        for size in range(1, k)
        for gamma in itertools.combinations(range(k), size)
    )


def library_violations(dfa: Dfa) -> list[str]:
    """Names of the properties that fail on a minimal partially ordered ``dfa``."""
    failed = []
    n, k = dfa.state_count, dfa.alphabet_size
    subsets = determinize(reverse(dfa))
    if minimize(subsets.dfa).state_count != len(subsets):
        failed.append("subset-distinguishability")
    rsc = reverse_state_complexity(dfa)
    if rsc != len(subsets) or rsc != reverse_state_complexity(complement(dfa)):
        failed.append("complement-duality")
    if not _unary_stable(dfa) or not _unary_stable(complement(dfa)):
        failed.append("unary-stabilization")
    verdicts = {m: is_j_trivial(dfa, m) for m in J_METHODS}
    if len(set(verdicts.values())) != 1:
        failed.append("three-way-agreement")
    j = verdicts["reverse-po"]
    if j and not is_r_trivial(dfa):
        failed.append("j-implies-r")
    if verdicts["simon"] and not _letter_removal_holds(dfa):
        failed.append("letter-removal-closure")
    upper_r, upper_j = upper_bounds(n, k)
    limit = upper_j if j and upper_j >= 0 else upper_r
    if limit >= 0 and rsc > limit:
        failed.append("upper-bound")
    return failed


def library_scan(dfas: Iterable[Dfa]) -> dict[str, PropertyResult]:
    checked = 0
    counts: dict[str, int] = {}
    first: dict[str, Dfa] = {}
    for dfa in dfas:
        if not is_minimal(dfa):
            raise ValueError("library_scan expects minimal automata")
        reachability_order(dfa)
        checked += 1
        for name in library_violations(dfa):
            counts[name] = counts.get(name, 0) + 1
            first.setdefault(name, dfa)
    names = ("subset-distinguishability", "complement-duality", "unary-stabilization", "three-way-agreement",
             "j-implies-r", "letter-removal-closure", "upper-bound")
    return {name: PropertyResult(name, checked, counts.get(name, 0), first.get(name)) for name in names}


def witness_violations(dfa: Dfa) -> list[str]:
    """Property checks that apply to any witness (minimal or not, any alphabet)."""
    failed = []
    m = minimize(dfa)
    subsets = determinize(reverse(m))
    if minimize(subsets.dfa).state_count != len(subsets):
        failed.append("subset-distinguishability")
    if reverse_state_complexity(dfa) != reverse_state_complexity(complement(dfa)):
        failed.append("complement-duality")
    if is_r_trivial(dfa):
        if not _unary_stable(m):
            failed.append("unary-stabilization")
        verdicts = {meth: is_j_trivial(dfa, meth) for meth in J_METHODS}
        if len(set(verdicts.values())) != 1:
            failed.append("three-way-agreement")
        k = m.alphabet_size
        # every letter subset of every reduced automaton: 3^k Simon evaluations
        if verdicts["simon"] and k <= LETTER_REMOVAL_MAX_LETTERS and not _letter_removal_holds(m):
            failed.append("letter-removal-closure")
        upper_r, upper_j = upper_bounds(m.state_count, k)
        limit = upper_j if verdicts["reverse-po"] and upper_j >= 0 else upper_r
        if limit >= 0 and reverse_state_complexity(m) > limit:
            failed.append("upper-bound")
    return failed
