"""Complete DFAs, NFAs over bitmask state sets, and the standard operations on them.

State sets are plain ``int`` bitmasks: bit ``q`` is set iff state ``q`` is a
member.  The owning automaton fixes the width, which is capped at
``MAX_STATES`` so a set fits a single machine word in the search kernel.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_STATES = 64

StateSet = int


def members(states: StateSet) -> list[int]:
    """Return the states of ``states`` in increasing order."""
    out = []
    q = 0
    while states:
        if states & 1:
            out.append(q)
        states >>= 1
        q += 1
    return out


def state_set(states: Iterable[int]) -> StateSet:
    mask = 0
    for q in states:
        mask |= 1 << q
    return mask


def full_set(n: int) -> StateSet:
    return (1 << n) - 1


def default_letters(k: int) -> tuple[str, ...]:
    if k <= 2:
        return ("a", "b")[:k]
    return tuple(f"a{i}" for i in range(1, k + 1))


class AutomatonError(ValueError):
    """Raised when an automaton description is malformed."""


@dataclass(frozen=True)
class Dfa:
    """A complete DFA with states ``0..state_count-1`` and letters ``0..alphabet_size-1``.

    ``delta[q][a]`` is the successor of ``q`` under letter ``a``.  Construct
    through :func:`build_dfa` to get validation.
    """

    state_count: int
    alphabet_size: int
    delta: tuple[tuple[int, ...], ...]
    initial: int
    accepting: StateSet
    letters: tuple[str, ...] = field(default=(), compare=False)

    def step(self, q: int, word: Sequence[int]) -> int:
        for a in word:
            q = self.delta[q][a]
        return q

    def accepts(self, word: Sequence[int]) -> bool:
        return bool(self.accepting >> self.step(self.initial, word) & 1)

    def is_accepting(self, q: int) -> bool:
        return bool(self.accepting >> q & 1)

    def letter_names(self) -> tuple[str, ...]:
        return self.letters or default_letters(self.alphabet_size)

    def table_encoding(self) -> tuple[int, ...]:
        """Row-major (state-major, letter-minor) flattening of the table."""
        return tuple(t for row in self.delta for t in row)


@dataclass(frozen=True)
class Nfa:
    """NFA with set-valued transitions; ``delta[q][a]`` is a :data:`StateSet`."""

    state_count: int
    alphabet_size: int
    delta: tuple[tuple[StateSet, ...], ...]
    initials: StateSet
    accepting: StateSet
    letters: tuple[str, ...] = field(default=(), compare=False)

    def image(self, states: StateSet, a: int) -> StateSet:
        out = 0
        row = self.delta
        q = 0
        while states:
            if states & 1:
                out |= row[q][a]
            states >>= 1
            q += 1
        return out

    def accepts(self, word: Sequence[int]) -> bool:
        current = self.initials
        for a in word:
            current = self.image(current, a)
        return bool(current & self.accepting)


@dataclass(frozen=True)
class SubsetAutomaton:
    """Result of the subset construction.

    ``dfa`` has one state per reachable subset; ``subsets[i]`` is the subset
    denoted by state ``i`` (state 0 is the initial subset).
    """

    dfa: Dfa
    subsets: tuple[StateSet, ...]

    def __len__(self) -> int:
        return len(self.subsets)


def build_dfa(
    state_count: int,
    alphabet_size: int,
    delta: Sequence[Sequence[int]],
    initial: int,
    accepting: Iterable[int] | StateSet,
    letters: Sequence[str] | None = None,
) -> Dfa:
    """Validate the arguments and return a :class:`Dfa`.

    ``accepting`` may be a bitmask or an iterable of states.
    """
    if not 1 <= state_count <= MAX_STATES:
        raise AutomatonError(f"state_count must be in 1..{MAX_STATES}, got {state_count}")
    if alphabet_size < 1:
        raise AutomatonError(f"alphabet_size must be positive, got {alphabet_size}")
    if len(delta) != state_count:
        raise AutomatonError(f"delta has {len(delta)} rows, expected {state_count}")
    rows = []
    for q, row in enumerate(delta):
        if len(row) != alphabet_size:
            raise AutomatonError(
                f"delta row {q} has {len(row)} entries, expected {alphabet_size}"
            )
        for a, t in enumerate(row):
            if not isinstance(t, int) or not 0 <= t < state_count:
                raise AutomatonError(f"delta({q}, {a}) = {t!r} is not a state")
        rows.append(tuple(row))
    if not 0 <= initial < state_count:
        raise AutomatonError(f"initial state {initial} out of range")
    if isinstance(accepting, int):
        acc = accepting
    else:
        acc = 0
        for q in accepting:
            if not 0 <= q < state_count:
                raise AutomatonError(f"accepting state {q} out of range")
            acc |= 1 << q
    if acc >> state_count:
        raise AutomatonError("accepting set contains states out of range")
    names: tuple[str, ...] = ()
    if letters is not None:
        names = tuple(letters)
        if len(names) != alphabet_size or len(set(names)) != alphabet_size:
            raise AutomatonError("letter names must be distinct, one per letter")
    return Dfa(state_count, alphabet_size, tuple(rows), initial, acc, names)


def preimages(dfa: Dfa) -> list[list[StateSet]]:
    """``pre[a][p]`` is the set of states sent to ``p`` by letter ``a``."""
    pre = [[0] * dfa.state_count for _ in range(dfa.alphabet_size)]
    for q, row in enumerate(dfa.delta):
        for a, p in enumerate(row):
            pre[a][p] |= 1 << q
    return pre


def reverse(dfa: Dfa | Nfa) -> Nfa:
    """Reverse every transition and swap the initial and accepting roles."""
    if isinstance(dfa, Nfa):
        return _reverse_nfa(dfa)
    pre = preimages(dfa)
    delta = tuple(
        tuple(pre[a][p] for a in range(dfa.alphabet_size)) for p in range(dfa.state_count)
    )
    return Nfa(
        dfa.state_count,
        dfa.alphabet_size,
        delta,
        dfa.accepting,
        1 << dfa.initial,
        dfa.letters,
    )


def _reverse_nfa(nfa: Nfa) -> Nfa:
    delta = [[0] * nfa.alphabet_size for _ in range(nfa.state_count)]
    for q in range(nfa.state_count):
        for a in range(nfa.alphabet_size):
            for p in members(nfa.delta[q][a]):
                delta[p][a] |= 1 << q
    return Nfa(
        nfa.state_count,
        nfa.alphabet_size,
        tuple(map(tuple, delta)),
        nfa.accepting,
        nfa.initials,
        nfa.letters,
    )


def determinize(nfa: Nfa) -> SubsetAutomaton:
    """Breadth-first subset construction from ``nfa.initials``.

    Subsets are numbered in discovery order, letters scanned in index order.
    The empty subset is kept when reachable.
    """
    k = nfa.alphabet_size
    # Union of single-state images is cheaper via per-letter lookup tables.
    cols = [[nfa.delta[q][a] for q in range(nfa.state_count)] for a in range(k)]
    index = {nfa.initials: 0}
    subsets = [nfa.initials]
    rows: list[tuple[int, ...]] = []
    i = 0
    while i < len(subsets):
        current = subsets[i]
        row = []
        for a in range(k):
            col = cols[a]
            image = 0
            rest = current
            while rest:
                low = rest & -rest
                image |= col[low.bit_length() - 1]
                rest ^= low
            j = index.get(image)
            if j is None:
                j = index[image] = len(subsets)
                subsets.append(image)
            row.append(j)
        rows.append(tuple(row))
        i += 1
    acc = 0
    for j, s in enumerate(subsets):
        if s & nfa.accepting:
            acc |= 1 << j
    dfa = Dfa(len(subsets), k, tuple(rows), 0, acc, nfa.letters)
    return SubsetAutomaton(dfa, tuple(subsets))


def reachable_subset_count(nfa: Nfa) -> int:
    """Number of subsets reachable from ``nfa.initials`` (no table is built)."""
    k = nfa.alphabet_size
    cols = [[nfa.delta[q][a] for q in range(nfa.state_count)] for a in range(k)]
    seen = {nfa.initials}
    frontier = [nfa.initials]
    while frontier:
        nxt = []
        for current in frontier:
            for col in cols:
                image = 0
                rest = current
                while rest:
                    low = rest & -rest
                    image |= col[low.bit_length() - 1]
                    rest ^= low
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return len(seen)


def reachable_states(dfa: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS order (letters in index order)."""
    order = [dfa.initial]
    seen = {dfa.initial}
    i = 0
    while i < len(order):
        for t in dfa.delta[order[i]]:
            if t not in seen:
                seen.add(t)
                order.append(t)
        i += 1
    return order


def _refine(dfa: Dfa, states: list[int]) -> dict[int, int]:
    """Moore-style partition refinement; returns a block id per state."""
    block = {q: int(dfa.is_accepting(q)) for q in states}
    count = len(set(block.values()))
    while True:
        sigs: dict[tuple, int] = {}
        new = {}
        for q in states:
            sig = (block[q],) + tuple(block[t] for t in dfa.delta[q])
            new[q] = sigs.setdefault(sig, len(sigs))
        if len(sigs) == count:
            return new
        block, count = new, len(sigs)


def minimize(dfa: Dfa) -> Dfa:
    """Minimal complete DFA of the same language.

    Unreachable states are dropped and equivalent states merged; the result is
    numbered in breadth-first discovery order from the initial state.
    """
    states = reachable_states(dfa)
    block = _refine(dfa, states)
    # canonical renumbering: BFS over blocks
    rep: dict[int, int] = {}
    for q in states:
        rep.setdefault(block[q], q)
    number = {block[dfa.initial]: 0}
    order = [block[dfa.initial]]
    i = 0
    while i < len(order):
        for t in dfa.delta[rep[order[i]]]:
            b = block[t]
            if b not in number:
                number[b] = len(order)
                order.append(b)
        i += 1
    delta = tuple(tuple(number[block[t]] for t in dfa.delta[rep[b]]) for b in order)
    acc = 0
    for i, b in enumerate(order):
        if dfa.is_accepting(rep[b]):
            acc |= 1 << i
    return Dfa(len(order), dfa.alphabet_size, delta, 0, acc, dfa.letters)


def is_minimal(dfa: Dfa) -> bool:
    states = reachable_states(dfa)
    if len(states) != dfa.state_count:
        return False
    return len(set(_refine(dfa, states).values())) == dfa.state_count


def complement(dfa: Dfa) -> Dfa:
    return Dfa(
        dfa.state_count,
        dfa.alphabet_size,
        dfa.delta,
        dfa.initial,
        full_set(dfa.state_count) & ~dfa.accepting,
        dfa.letters,
    )


def state_complexity(dfa: Dfa) -> int:
    return minimize(dfa).state_count


def reverse_state_complexity(dfa: Dfa) -> int:
    """sc of the reversed language.

    The input is minimized first; the reachable subsets of the reverse of a
    minimal DFA are pairwise distinguishable, so counting them suffices.
    """
    return reachable_subset_count(reverse(minimize(dfa)))


def dead_states(dfa: Dfa) -> StateSet:
    """Non-accepting states that loop on every letter."""
    out = 0
    for q, row in enumerate(dfa.delta):
        if not dfa.is_accepting(q) and all(t == q for t in row):
            out |= 1 << q
    return out


def words(k: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """All words over ``0..k-1`` of length at most ``max_len``, shortest first."""
    layer: list[tuple[int, ...]] = [()]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + (a,) for w in layer for a in range(k)]
