"""Witness automaton families and closed-form bounds on the reverse's state complexity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .automata import Dfa, build_dfa
from .regex import regex_to_min_dfa

Family = Literal["r-trivial", "j-trivial"]

# Binary witnesses for n = 2..7 with every sublanguage reference substituted.
_L2 = "a*b(a+b)*"
_L3 = f"b*+b*a({_L2})"
_L4 = f"b*a({_L3})"
_L5 = f"b*a(a({_L3})+b({_L2}))"
_L6 = f"b*a(b*a+{_L5})"
_L7 = f"b*ab*a(a+b)(ε+a({_L3})+b({_L2}))"

TABLE1_EXPRESSIONS: dict[int, str] = {2: _L2, 3: _L3, 4: _L4, 5: _L5, 6: _L6, 7: _L7}


def fig2_witness(n: int) -> Dfa:
    """Binary partially ordered DFA whose reverse needs at least 2^(n-2) states.

    State 0 is an accepting sink, n-1 a dead state, n-2 initial; the chain
    n-2 -> ... -> 1 moves down under both letters, and 1 splits into 0 on
    ``a`` and n-1 on ``b``.
    """
    if n < 3:
        raise ValueError(f"fig2_witness needs n >= 3, got {n}")
    delta = [[0, 0] for _ in range(n)]
    delta[n - 1] = [n - 1, n - 1]
    delta[1] = [0, n - 1]
    for i in range(2, n - 1):
        delta[i] = [i - 1, i - 1]
    return build_dfa(n, 2, delta, n - 2, [0])


def fig5_witness(n: int) -> Dfa:
    """J-trivial DFA over n-2 letters whose reverse has 2^(n-1)-1 states.

    Letter ``a_j`` (index j-1) moves state i >= 1 to i+1 when i <= j, to the
    accepting sink 0 when j = i-1, and leaves it in place otherwise.
    """
    if n < 3:
        raise ValueError(f"fig5_witness needs n >= 3, got {n}")
    k = n - 2
    delta = [[0] * k]
    for i in range(1, n):
        row = []
        for j in range(1, k + 1):
            if i <= j:
                row.append(i + 1)
            elif j == i - 1:
                row.append(0)
            else:
                row.append(i)
        delta.append(row)
    letters = [f"a{j}" for j in range(1, k + 1)]
    return build_dfa(n, k, delta, 1, [0], letters)


def table1_witness(n: int) -> Dfa:
    """Minimal DFA of the binary J-trivial witness with sc = n, 2 <= n <= 7."""
    if n not in TABLE1_EXPRESSIONS:
        raise ValueError(f"table1_witness is defined for 2 <= n <= 7, got {n}")
    return regex_to_min_dfa(TABLE1_EXPRESSIONS[n], ("a", "b"))


@dataclass(frozen=True)
class BoundQuery:
    n: int
    k: int
    family: Family = "r-trivial"

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError("n and k must be positive")


def theorem1_bound(n: int, k: int) -> int:
    """Tight upper bound on sc(L^R) for R-trivial L with sc(L) = n over k letters."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if k == 1:
        return n
    if k == 2:
        if n == 1:
            return 1
        if n <= 6:
            return 2 ** (n - 2) + n - 1
        if n == 7:
            return 34
        return 2 ** (n - 2)
    return 2 ** (n - 1)


def corollary3_bound(n: int) -> int:
    """Upper bound on sc(L^R) for binary J-trivial L with sc(L) = n >= 4."""
    if n < 4:
        raise ValueError(f"the binary J-trivial bound needs n >= 4, got {n}")
    half = 2 ** (n - 3)
    return half + min(max(2 * n - 3, (n - 2) ** 2), half) + (n - 1)


def jtrivial_alphabet_bound(n: int, k: int) -> Optional[int]:
    """Upper bound for J-trivial L with sc(L) = n over k letters, or None when open."""
    if n < 3:
        raise ValueError(f"jtrivial_alphabet_bound needs n >= 3, got {n}")
    if k < 1:
        raise ValueError("k must be positive")
    if k >= n - 1:
        return 2 ** (n - 1)
    if k == n - 2:
        return 2 ** (n - 1) - 1
    if k == 1:
        return n
    if k == 2:
        return corollary3_bound(n)
    return None


def bound(query: BoundQuery) -> Optional[int]:
    if query.family == "r-trivial":
        return theorem1_bound(query.n, query.k)
    if query.family == "j-trivial":
        return jtrivial_alphabet_bound(query.n, query.k)
    raise ValueError(f"unknown family {query.family!r}")
