"""A small regular-expression dialect and its compilation to automata.

Syntax: ``+`` is union, juxtaposition is concatenation, postfix ``*`` is
star, ``ε`` or ``eps`` is the empty word and ``∅`` the empty language.
Letters are the names of the declared alphabet (longest match wins).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .automata import Dfa, Nfa, default_letters, determinize, minimize


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    index: int


@dataclass(frozen=True)
class Union_:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Concat:
    left: "Regex"
    right: "Regex"


@dataclass(frozen=True)
class Star:
    inner: "Regex"


Regex = Union[Empty, Epsilon, Letter, Union_, Concat, Star]

EPSILON_TOKENS = ("ε", "eps")
EMPTY_TOKENS = ("∅",)


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


class _Parser:
    def __init__(self, text: str, alphabet: Sequence[str]):
        self.text = text
        self.pos = 0
        # longest names first so "a1" beats "a"
        self.names = sorted(((name, i) for i, name in enumerate(alphabet)), key=lambda x: -len(x[0]))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Regex:
        node = self.union()
        if self.peek():
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def union(self) -> Regex:
        node = self.concat()
        while self.peek() == "+":
            self.pos += 1
            node = Union_(node, self.concat())
        return node

    def concat(self) -> Regex:
        node = self.starred()
        while self.peek() not in ("", "+", ")"):
            node = Concat(node, self.starred())
        return node

    def starred(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        c = self.peek()
        start = self.pos
        if c == "(":
            self.pos += 1
            node = self.union()
            if self.peek() != ")":
                raise RegexSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return node
        if not c or c in "+*)":
            raise RegexSyntaxError(f"expected an expression, found {c or 'end of input'!r}", start)
        for token in EPSILON_TOKENS:
            if self.text.startswith(token, self.pos) and not self._is_letter_here(token):
                self.pos += len(token)
                return Epsilon()
        for token in EMPTY_TOKENS:
            if self.text.startswith(token, self.pos):
                self.pos += len(token)
                return Empty()
        for name, i in self.names:
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return Letter(i)
        raise RegexSyntaxError(f"unknown letter {c!r}", start)

    def _is_letter_here(self, token: str) -> bool:
        # an alphabet name longer than the epsilon token takes precedence
        return any(
            len(name) > len(token) and self.text.startswith(name, self.pos) for name, _ in self.names
        )


def parse_regex(text: str, alphabet: Sequence[str] = ("a", "b")) -> Regex:
    return _Parser(text, alphabet).parse()


def to_text(node: Regex, alphabet: Sequence[str] = ("a", "b")) -> str:
    """Print with the minimum parentheses needed to reparse to the same tree."""

    def go(e: Regex, level: int) -> str:
        # level: 0 union context, 1 concat context, 2 star operand
        if isinstance(e, Empty):
            return "∅"
        if isinstance(e, Epsilon):
            return "ε"
        if isinstance(e, Letter):
            return alphabet[e.index]
        if isinstance(e, Star):
            return go(e.inner, 2) + "*"
        if isinstance(e, Concat):
            # concatenation parses left-associatively
            right = go(e.right, 1)
            if isinstance(e.right, Concat):
                right = f"({right})"
            s = go(e.left, 1) + right
            return f"({s})" if level >= 2 else s
        s = go(e.left, 0) + "+" + (f"({go(e.right, 0)})" if isinstance(e.right, Union_) else go(e.right, 0))
        return f"({s})" if level >= 1 else s

    return go(node, 0)


def matches(node: Regex, word: Sequence[int]) -> bool:
    """Membership by structural recursion over the tree (no automaton)."""
    word = tuple(word)

    @lru_cache(maxsize=None)
    def ends(e: Regex, i: int) -> frozenset[int]:
        # positions j such that word[i:j] is in L(e)
        if isinstance(e, Empty):
            return frozenset()
        if isinstance(e, Epsilon):
            return frozenset({i})
        if isinstance(e, Letter):
            return frozenset({i + 1}) if i < len(word) and word[i] == e.index else frozenset()
        if isinstance(e, Union_):
            return ends(e.left, i) | ends(e.right, i)
        if isinstance(e, Concat):
            out: set[int] = set()
            for j in ends(e.left, i):
                out |= ends(e.right, j)
            return frozenset(out)
        reached = {i}
        frontier = [i]
        while frontier:
            j = frontier.pop()
            for t in ends(e.inner, j):
                if t not in reached:
                    reached.add(t)
                    frontier.append(t)
        return frozenset(reached)

    return len(word) in ends(node, 0)


def _letters_in(node: Regex) -> int:
    if isinstance(node, Letter):
        return node.index + 1
    if isinstance(node, (Union_, Concat)):
        return max(_letters_in(node.left), _letters_in(node.right))
    if isinstance(node, Star):
        return _letters_in(node.inner)
    return 0


def regex_to_nfa(node: Regex, alphabet_size: int | None = None) -> Nfa:
    """Thompson construction followed by epsilon elimination."""
    k = alphabet_size if alphabet_size is not None else max(1, _letters_in(node))
    eps: list[list[int]] = []
    moves: list[dict[int, set[int]]] = []

    def new() -> int:
        eps.append([])
        moves.append({})
        return len(eps) - 1

    def build(e: Regex) -> tuple[int, int]:
        s, f = new(), new()
        if isinstance(e, Epsilon):
            eps[s].append(f)
        elif isinstance(e, Letter):
            moves[s].setdefault(e.index, set()).add(f)
        elif isinstance(e, Union_):
            for part in (e.left, e.right):
                ps, pf = build(part)
                eps[s].append(ps)
                eps[pf].append(f)
        elif isinstance(e, Concat):
            ls, lf = build(e.left)
            rs, rf = build(e.right)
            eps[s].append(ls)
            eps[lf].append(rs)
            eps[rf].append(f)
        elif isinstance(e, Star):
            ps, pf = build(e.inner)
            eps[s] += [ps, f]
            eps[pf] += [ps, f]
        return s, f

    start, final = build(node)
    n = len(eps)
    closure = []
    for q in range(n):
        seen = 1 << q
        stack = [q]
        while stack:
            p = stack.pop()
            for t in eps[p]:
                if not seen >> t & 1:
                    seen |= 1 << t
                    stack.append(t)
        closure.append(seen)

    def close(states: int) -> int:
        out = 0
        q = 0
        while states:
            if states & 1:
                out |= closure[q]
            states >>= 1
            q += 1
        return out

    delta = []
    for q in range(n):
        row = []
        for a in range(k):
            image = 0
            for p in range(n):
                if closure[q] >> p & 1:
                    for t in moves[p].get(a, ()):
                        image |= 1 << t
            row.append(close(image))
        delta.append(tuple(row))
    accepting = 0
    for q in range(n):
        if closure[q] >> final & 1:
            accepting |= 1 << q
    return Nfa(n, k, tuple(delta), closure[start], accepting)


def regex_to_min_dfa(text: str, alphabet: Sequence[str] = ("a", "b")) -> Dfa:
    node = parse_regex(text, alphabet)
    nfa = regex_to_nfa(node, len(alphabet))
    m = minimize(determinize(nfa).dfa)
    letters = tuple(alphabet)
    if letters == default_letters(len(letters)):
        letters = ()
    return Dfa(m.state_count, m.alphabet_size, m.delta, m.initial, m.accepting, letters)
