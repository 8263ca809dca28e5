import itertools

import pytest
from hypothesis import given

from conftest import dfas, even_as
from porev.automata import build_dfa, complement, members, minimize
from porev.order import (
    J_METHODS,
    NotPartiallyOrdered,
    component_cone,
    is_j_trivial,
    is_partially_ordered,
    is_r_trivial,
    letter_graph,
    reachability_order,
    self_loop_alphabet,
    simon_condition,
    trahtman_condition,
    weak_component,
)
from porev.witnesses import fig2_witness, fig5_witness, table1_witness


def test_order_fig2():
    cert = reachability_order(fig2_witness(5))
    assert members(cert.maximal) == [0, 4]


@pytest.mark.parametrize("n", range(3, 9))
def test_order_fig5(n):
    assert members(reachability_order(fig5_witness(n)).maximal) == [0]


def test_order_even_as_fails_with_two_cycle():
    with pytest.raises(NotPartiallyOrdered) as info:
        reachability_order(even_as())
    cycle = info.value.cycle
    assert len(cycle) == 2
    assert {q for q, _ in cycle} == {0, 1}


def test_cycle_witness_skips_states_below_the_cycle():
    # 0 -> 1 <-> 2, 3 hangs off the cycle
    dfa = build_dfa(4, 2, [[1, 0], [2, 3], [1, 3], [3, 3]], 0, [3])
    with pytest.raises(NotPartiallyOrdered) as info:
        reachability_order(dfa)
    assert {q for q, _ in info.value.cycle} == {1, 2}


@given(dfas(max_states=6))
def test_certificate_soundness(dfa):
    try:
        cert = reachability_order(dfa)
    except NotPartiallyOrdered as exc:
        q = exc.cycle[0][0]
        assert len(exc.cycle) >= 2
        for state, letter in exc.cycle:
            assert state == q
            q = dfa.delta[q][letter]
        assert q == exc.cycle[0][0]
        return
    for p, row in enumerate(dfa.delta):
        for q in row:
            assert cert.order[p] <= cert.order[q]
            assert cert.order[p] < cert.order[q] or p == q
    for p in range(dfa.state_count):
        assert bool(cert.maximal >> p & 1) == all(t == p for t in dfa.delta[p])


@given(dfas(max_states=6, monotone=True))
def test_monotone_tables_are_partially_ordered(dfa):
    assert is_partially_ordered(dfa)


def test_letter_graph_examples():
    d = fig2_witness(3)
    assert letter_graph(d, []).edges == frozenset()
    assert letter_graph(d, [0]).edges == {(0, 0), (1, 0), (2, 2)}
    full = letter_graph(d, [0, 1])
    assert full.edges == {(p, q) for p, row in enumerate(d.delta) for q in row}
    with pytest.raises(ValueError):
        letter_graph(d, [2])


def test_component_cone_examples():
    g = letter_graph(fig2_witness(3), [0, 1])
    assert members(component_cone(g, 1)) == [0, 1, 2]
    assert members(component_cone(g, 0)) == [0]
    assert members(component_cone(g, 2)) == [2]


def test_self_loop_alphabet_examples():
    assert self_loop_alphabet(fig2_witness(6), 0) == {0, 1}
    for n in range(4, 9):
        assert self_loop_alphabet(fig5_witness(n), n - 1) == set(range(n - 3))
    perm = build_dfa(2, 1, [[1], [0]], 0, [0])
    assert self_loop_alphabet(perm, 0) == set()


def test_simon_examples():
    for n in range(3, 9):
        assert simon_condition(fig5_witness(n))
        assert not simon_condition(fig2_witness(n))
    assert simon_condition(build_dfa(1, 3, [[0, 0, 0]], 0, [0]))
    with pytest.raises(NotPartiallyOrdered):
        simon_condition(even_as())


def test_trahtman_examples():
    d = fig2_witness(3)
    # Sigma(0) = {a, b}: the weak component of 0 holds both maximal states
    g = letter_graph(d, self_loop_alphabet(d, 0))
    assert members(weak_component(g, 0)) == [0, 1, 2]
    assert not trahtman_condition(d)
    assert trahtman_condition(d) == simon_condition(d)
    for n in range(3, 9):
        assert trahtman_condition(fig5_witness(n))
    assert trahtman_condition(build_dfa(1, 2, [[0, 0]], 0, []))
    with pytest.raises(NotPartiallyOrdered):
        trahtman_condition(even_as())


def test_r_trivial_examples():
    for n in range(3, 9):
        assert is_r_trivial(fig2_witness(n))
    assert not is_r_trivial(even_as())
    assert is_r_trivial(table1_witness(4))


@pytest.mark.parametrize("method", J_METHODS)
def test_j_trivial_examples(method):
    for n in range(2, 8):
        assert is_j_trivial(table1_witness(n), method)
    for n in range(3, 8):
        assert not is_j_trivial(fig2_witness(n), method)
        assert is_j_trivial(fig5_witness(n), method)
    assert not is_j_trivial(even_as(), method)


def test_j_trivial_rejects_unknown_method():
    with pytest.raises(ValueError):
        is_j_trivial(fig5_witness(4), "stern")


def test_non_minimal_input_is_minimized():
    # fig5 with a duplicated accepting sink appended is the same language
    d = fig5_witness(4)
    rows = [list(r) for r in d.delta] + [[4, 4]]
    rows[3][1] = 4
    padded = build_dfa(5, 2, rows, 1, [0, 4])
    assert minimize(padded) == minimize(d)
    assert all(is_j_trivial(padded, m) for m in J_METHODS)


@given(dfas(max_states=5, max_letters=3))
def test_three_way_agreement_random(dfa):
    verdicts = {m: is_j_trivial(dfa, m) for m in J_METHODS}
    assert len(set(verdicts.values())) == 1, verdicts
    if verdicts["reverse-po"]:
        assert is_r_trivial(dfa)


@given(dfas(max_states=5, max_letters=3))
def test_j_trivial_closed_under_complement(dfa):
    assert is_j_trivial(dfa) == is_j_trivial(complement(dfa))


def test_three_way_agreement_exhaustive_small():
    # every monotone binary DFA with at most 4 states
    for n in range(1, 5):
        ranges = [range(i, n) for i in range(n) for _ in range(2)]
        for flat in itertools.product(*ranges):
            rows = [flat[2 * i:2 * i + 2] for i in range(n)]
            for mask in range(2**n):
                d = build_dfa(n, 2, rows, 0, mask)
                verdicts = {m: is_j_trivial(d, m) for m in J_METHODS}
                assert len(set(verdicts.values())) == 1, (rows, mask, verdicts)
