"""JSON and DOT serialization of DFAs."""

from __future__ import annotations

import json
import re
from typing import Any

from .automata import AutomatonError, Dfa, build_dfa, members


def dfa_to_dict(dfa: Dfa) -> dict[str, Any]:
    return {
        "states": dfa.state_count,
        "alphabet": list(dfa.letter_names()),
        "initial": dfa.initial,
        "accepting": members(dfa.accepting),
        "delta": [list(row) for row in dfa.delta],
    }


def dfa_from_dict(data: dict[str, Any]) -> Dfa:
    try:
        alphabet = list(data["alphabet"])
        return build_dfa(
            int(data["states"]),
            len(alphabet),
            [list(row) for row in data["delta"]],
            int(data["initial"]),
            list(data["accepting"]),
            alphabet,
        )
    except (KeyError, TypeError) as exc:
        raise AutomatonError(f"malformed automaton JSON: {exc}") from exc


def dfa_to_json(dfa: Dfa) -> str:
    return json.dumps(dfa_to_dict(dfa), separators=(", ", ": "))


def dfa_from_json(text: str) -> Dfa:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise AutomatonError("automaton JSON must be an object")
    # witness/regex reports wrap the automaton next to its measurements
    if isinstance(data.get("automaton"), dict):
        data = data["automaton"]
    return dfa_from_dict(data)


def _quote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', '\\"'))


def dfa_to_dot(dfa: Dfa, name: str = "dfa") -> str:
    """Graphviz source: doublecircle for accepting states, an arrow into the initial state.

    Letters leading to the same target share one edge label.
    """
    letters = dfa.letter_names()
    lines = [
        f"digraph {name} {{",
        f"  // alphabet: {' '.join(letters)}",
        "  rankdir=LR;",
        '  __start [shape=point, label=""];',
    ]
    for q in range(dfa.state_count):
        shape = "doublecircle" if dfa.is_accepting(q) else "circle"
        lines.append(f"  {q} [shape={shape}];")
    lines.append(f"  __start -> {dfa.initial};")
    for q, row in enumerate(dfa.delta):
        targets: dict[int, list[str]] = {}
        for a, t in enumerate(row):
            targets.setdefault(t, []).append(letters[a])
        for t, labels in targets.items():
            lines.append(f"  {q} -> {t} [label={_quote(','.join(labels))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r"^\s*(\d+)\s*\[shape=(\w+)\];")
_EDGE = re.compile(r'^\s*(\d+)\s*->\s*(\d+)\s*\[label="([^"]*)"\];')
_START = re.compile(r"^\s*__start\s*->\s*(\d+);")
_ALPHABET = re.compile(r"^\s*//\s*alphabet:\s*(.*)$")


def dfa_from_dot(text: str) -> Dfa:
    """Parse DOT produced by :func:`dfa_to_dot`.  Arbitrary DOT is not supported."""
    letters: list[str] | None = None
    shapes: dict[int, str] = {}
    edges: list[tuple[int, int, list[str]]] = []
    initial = None
    for line in text.splitlines():
        if m := _ALPHABET.match(line):
            letters = m.group(1).split()
        elif m := _NODE.match(line):
            shapes[int(m.group(1))] = m.group(2)
        elif m := _START.match(line):
            initial = int(m.group(1))
        elif m := _EDGE.match(line):
            edges.append((int(m.group(1)), int(m.group(2)), m.group(3).split(",")))
    if letters is None or initial is None or not shapes:
        raise AutomatonError("DOT input was not produced by this tool")
    n = len(shapes)
    if sorted(shapes) != list(range(n)):
        raise AutomatonError("DOT states must be numbered 0..n-1")
    position = {name: i for i, name in enumerate(letters)}
    delta: list[list[int | None]] = [[None] * len(letters) for _ in range(n)]
    for q, t, labels in edges:
        for label in labels:
            if label not in position:
                raise AutomatonError(f"unknown letter {label!r} in DOT edge")
            delta[q][position[label]] = t
    for q, row in enumerate(delta):
        if None in row:
            raise AutomatonError(f"state {q} is missing a transition")
    accepting = [q for q, shape in shapes.items() if shape == "doublecircle"]
    return build_dfa(n, len(letters), delta, initial, accepting, letters)  # type: ignore[arg-type]
