"""Partial-order certificates and R-/J-triviality tests.

J-triviality is decided three ways: by checking that the minimal DFAs of the
language and of its reverse are both partially ordered, by Simon's condition
over every letter subset, and by Trahtman's per-state self-loop condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal

from .automata import (
    Dfa,
    StateSet,
    determinize,
    members,
    minimize,
    reverse,
)

MAX_SIMON_LETTERS = 16

JMethod = Literal["reverse-po", "simon", "trahtman"]
J_METHODS: tuple[JMethod, ...] = ("reverse-po", "simon", "trahtman")


class NotPartiallyOrdered(Exception):
    """The reachability relation has a cycle through two or more states.

    ``cycle`` is a list of ``(state, letter)`` steps; following the letters
    from ``cycle[0][0]`` returns to it.
    """

    def __init__(self, cycle: list[tuple[int, int]]):
        self.cycle = cycle
        states = " -> ".join(str(q) for q, _ in cycle)
        super().__init__(f"reachability cycle {states} -> {cycle[0][0]}")


@dataclass(frozen=True)
class PartialOrderCert:
    """``order[q]`` is the position of ``q`` in a topological numbering."""

    order: tuple[int, ...]
    maximal: StateSet


@dataclass(frozen=True)
class LetterGraph:
    state_count: int
    edges: frozenset[tuple[int, int]]

    def successors(self, p: int) -> list[int]:
        return sorted(q for (s, q) in self.edges if s == p)


def _find_cycle(dfa: Dfa, candidates: set[int]) -> list[tuple[int, int]]:
    # Drop states without a non-loop successor in the set until none remain;
    # then every walk along such edges must revisit a state.
    candidates = set(candidates)
    changed = True
    while changed:
        changed = False
        for q in sorted(candidates):
            if not any(t != q and t in candidates for t in dfa.delta[q]):
                candidates.discard(q)
                changed = True
    start = min(candidates)
    path: list[tuple[int, int]] = []
    position: dict[int, int] = {}
    q = start
    while q not in position:
        position[q] = len(path)
        for a, t in enumerate(dfa.delta[q]):
            if t != q and t in candidates:
                path.append((q, a))
                q = t
                break
    return path[position[q]:]


def reachability_order(dfa: Dfa) -> PartialOrderCert:
    """Topologically number the states, ignoring self-loops.

    Raises :class:`NotPartiallyOrdered` with a witness cycle when the
    transition graph has a cycle other than a self-loop.
    """
    n = dfa.state_count
    succ = [sorted({t for t in row if t != q}) for q, row in enumerate(dfa.delta)]
    indegree = [0] * n
    for q in range(n):
        for t in succ[q]:
            indegree[t] += 1
    ready = [q for q in range(n) if indegree[q] == 0]
    order = [0] * n
    placed = 0
    while ready:
        q = min(ready)
        ready.remove(q)
        order[q] = placed
        placed += 1
        for t in succ[q]:
            indegree[t] -= 1
            if indegree[t] == 0:
                ready.append(t)
    if placed < n:
        left = {q for q in range(n) if indegree[q] > 0}
        raise NotPartiallyOrdered(_find_cycle(dfa, left))
    maximal = 0
    for q in range(n):
        if not succ[q]:
            maximal |= 1 << q
    return PartialOrderCert(tuple(order), maximal)


def is_partially_ordered(dfa: Dfa) -> bool:
    try:
        reachability_order(dfa)
    except NotPartiallyOrdered:
        return False
    return True


def letter_graph(dfa: Dfa, gamma: Iterable[int]) -> LetterGraph:
    gamma = set(gamma)
    if not gamma <= set(range(dfa.alphabet_size)):
        raise ValueError(f"letters {sorted(gamma)} not in the alphabet")
    edges = frozenset((p, row[a]) for p, row in enumerate(dfa.delta) for a in gamma)
    return LetterGraph(dfa.state_count, edges)


def _adjacency(g: LetterGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.state_count)]
    for p, q in sorted(g.edges):
        adj[p].append(q)
    return adj


def _cone(adj: list[list[int]], p: int) -> StateSet:
    seen = 1 << p
    stack = [p]
    while stack:
        q = stack.pop()
        for t in adj[q]:
            if not seen >> t & 1:
                seen |= 1 << t
                stack.append(t)
    return seen


def component_cone(g: LetterGraph, p: int) -> StateSet:
    """``p`` together with every state reachable from it in ``g``."""
    return _cone(_adjacency(g), p)


def self_loop_alphabet(dfa: Dfa, p: int) -> frozenset[int]:
    return frozenset(a for a, t in enumerate(dfa.delta[p]) if t == p)


def _maximal_in(adj: list[list[int]], part: StateSet) -> list[int]:
    return [q for q in members(part) if all(t == q or not part >> t & 1 for t in adj[q])]


def _require_po(dfa: Dfa) -> None:
    reachability_order(dfa)


def simon_condition(dfa: Dfa) -> bool:
    """For every letter subset, each cone of the restricted graph has one maximal state.

    Exponential in the alphabet size.
    """
    _require_po(dfa)
    k = dfa.alphabet_size
    if k > MAX_SIMON_LETTERS:
        raise ValueError(f"simon_condition supports at most {MAX_SIMON_LETTERS} letters")
    for size in range(k + 1):
        for gamma in combinations(range(k), size):
            adj = _adjacency(letter_graph(dfa, gamma))
            for p in range(dfa.state_count):
                if len(_maximal_in(adj, _cone(adj, p))) != 1:
                    return False
    return True


def weak_component(g: LetterGraph, p: int) -> StateSet:
    """States connected to ``p`` when edge directions are ignored."""
    adj: list[list[int]] = [[] for _ in range(g.state_count)]
    for s, t in g.edges:
        adj[s].append(t)
        adj[t].append(s)
    return _cone(adj, p)


def trahtman_condition(dfa: Dfa) -> bool:
    """For every state p, the weak component of p in the graph of its
    self-loop letters has exactly one maximal state."""
    _require_po(dfa)
    for p in range(dfa.state_count):
        g = letter_graph(dfa, self_loop_alphabet(dfa, p))
        if len(_maximal_in(_adjacency(g), weak_component(g, p))) != 1:
            return False
    return True


def is_r_trivial(dfa: Dfa) -> bool:
    return is_partially_ordered(minimize(dfa))


def is_j_trivial(dfa: Dfa, method: JMethod = "reverse-po") -> bool:
    m = minimize(dfa)
    if not is_partially_ordered(m):
        return False
    if method == "reverse-po":
        return is_partially_ordered(minimize(determinize(reverse(m)).dfa))
    if method == "simon":
        return simon_condition(m)
    if method == "trahtman":
        return trahtman_condition(m)
    raise ValueError(f"unknown method {method!r}")
