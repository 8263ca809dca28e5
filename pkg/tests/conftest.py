import pytest
from hypothesis import settings
from hypothesis import strategies as st

from porev.automata import Dfa, build_dfa
from porev.witnesses import fig2_witness, fig5_witness, table1_witness

# compiled kernels pay their JIT cost on the first example
settings.register_profile("porev", deadline=None)
settings.load_profile("porev")


@st.composite
def dfas(draw, max_states=5, max_letters=3, monotone=False):
    n = draw(st.integers(1, max_states))
    k = draw(st.integers(1, max_letters))
    delta = [
        [draw(st.integers(q if monotone else 0, n - 1)) for _ in range(k)] for q in range(n)
    ]
    initial = 0 if monotone else draw(st.integers(0, n - 1))
    accepting = draw(st.integers(0, 2**n - 1))
    return build_dfa(n, k, delta, initial, accepting)


def even_as() -> Dfa:
    """Minimal DFA of (aa)*."""
    return build_dfa(2, 1, [[1], [0]], 0, [0])


def two_accepting_sinks() -> Dfa:
    return build_dfa(3, 2, [[1, 2], [1, 1], [2, 2]], 0, [1, 2])


def l2_dfa() -> Dfa:
    return build_dfa(2, 2, [[0, 1], [1, 1]], 0, [1])


@pytest.fixture(scope="session")
def corpus() -> list[Dfa]:
    out = [build_dfa(1, 1, [[0]], 0, []), build_dfa(1, 2, [[0, 0]], 0, [0]), even_as(), l2_dfa()]
    out += [fig2_witness(n) for n in range(3, 9)]
    out += [fig5_witness(n) for n in range(3, 8)]
    out += [table1_witness(n) for n in range(2, 8)]
    out.append(two_accepting_sinks())
    return out
