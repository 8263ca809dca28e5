import itertools
import json
from dataclasses import replace

import pytest

from porev.automata import build_dfa, dead_states, is_minimal, reverse_state_complexity
from porev.order import reachability_order
from porev.search import (
    MAX_N,
    CandidateCursor,
    SearchGuardError,
    SearchRecord,
    candidate_count,
    decode_table,
    encode_table,
    enumerate_po_dfas,
    partition_workload,
    scan_all_modes,
    table_count,
    verify_record,
    worst_case_reverse,
    worst_case_reverse_reference,
)


def test_candidate_counts():
    assert candidate_count(2, 2) == 16
    assert candidate_count(3, 2) == 288
    assert sum(1 for _ in enumerate_po_dfas(2, 2)) == 16
    assert sum(1 for _ in enumerate_po_dfas(3, 2)) == 288
    assert sum(1 for _ in enumerate_po_dfas(3, 3)) == candidate_count(3, 3)


def test_enumeration_order_and_order_certificates():
    seen = []
    for dfa in enumerate_po_dfas(3, 2):
        reachability_order(dfa)
        assert dfa.initial == 0
        assert all(t >= q for q, row in enumerate(dfa.delta) for t in row)
        seen.append((dfa.table_encoding(), dfa.accepting))
    assert seen == sorted(seen)


def test_table_index_matches_lexicographic_order():
    n, k = 4, 2
    ranges = [range(i, n) for i in range(n) for _ in range(k)]
    for index, flat in enumerate(itertools.product(*ranges)):
        rows = [list(flat[i * k:(i + 1) * k]) for i in range(n)]
        assert decode_table(index, n, k) == rows
        assert encode_table(rows, n, k) == index
    assert index + 1 == table_count(n, k)


def test_cursor_candidates():
    cursor = CandidateCursor(3, 2, 2, 5)
    got = list(cursor.candidates())
    assert len(got) == cursor.candidate_count == 3 * 8
    full = list(enumerate_po_dfas(3, 2))
    assert got == full[2 * 8:5 * 8]


def test_partition_workload_covers_everything():
    assert partition_workload(4, 2, 1) == [CandidateCursor(4, 2, 0, table_count(4, 2), 0)]
    for parts in (2, 3, 7, 50, 10**6):
        cursors = partition_workload(5, 2, parts)
        assert 1 <= len(cursors) <= parts
        assert cursors[0].lo == 0 and cursors[-1].hi == table_count(5, 2)
        for left, right in zip(cursors, cursors[1:]):
            assert left.hi == right.lo
        assert sum(c.candidate_count for c in cursors) == candidate_count(5, 2)


@pytest.mark.parametrize("n,k", [(0, 2), (MAX_N + 1, 2), (3, 5), (3, 0)])
def test_guard(n, k):
    with pytest.raises(SearchGuardError):
        worst_case_reverse(n, k)
    with pytest.raises(SearchGuardError):
        list(enumerate_po_dfas(n, k))


def test_bad_filters():
    with pytest.raises(ValueError):
        worst_case_reverse(3, 2, "aperiodic")
    with pytest.raises(ValueError):
        worst_case_reverse(3, 2, dead_mode="sometimes")
    with pytest.raises(ValueError):
        worst_case_reverse(3, 2, symmetry="half")
    with pytest.raises(ValueError):
        partition_workload(3, 2, 0)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 2), (4, 2), (3, 3), (4, 1)])
@pytest.mark.parametrize("cls", ["r-trivial", "j-trivial"])
@pytest.mark.parametrize("mode", ["any", "require", "forbid"])
def test_kernel_matches_reference(n, k, cls, mode):
    fast = worst_case_reverse(n, k, cls, mode)
    slow = worst_case_reverse_reference(n, k, cls, mode)
    assert fast == slow
    assert verify_record(fast)


@pytest.mark.parametrize("mode", ["any", "require", "forbid"])
def test_symmetry_pruning_is_invisible(mode):
    for cls in ("r-trivial", "j-trivial"):
        for n, k in [(4, 2), (4, 3), (5, 2)]:
            assert worst_case_reverse(n, k, cls, mode, "full") == worst_case_reverse(n, k, cls, mode, "none")


def test_partitioned_scan_equals_sequential():
    seq = scan_all_modes(5, 2)
    assert scan_all_modes(5, 2, parts=8) == seq
    assert scan_all_modes(5, 2, symmetry="none", parts=3) == seq


def test_parallel_scan_equals_sequential():
    assert scan_all_modes(5, 2, jobs=2) == scan_all_modes(5, 2)


def test_known_maxima():
    assert worst_case_reverse(4, 2, "r-trivial", "any").max_reverse_sc == 7
    assert worst_case_reverse(4, 2, "j-trivial", "any").max_reverse_sc == 7
    records = scan_all_modes(6, 2)
    assert records["forbid"].max_reverse_sc == records["require"].max_reverse_sc == 21


def test_witness_is_least_encoding_among_maxima():
    record = worst_case_reverse(4, 2)
    best = None
    for dfa in enumerate_po_dfas(4, 2):
        if is_minimal(dfa) and reverse_state_complexity(dfa) == record.max_reverse_sc:
            best = dfa
            break
    assert record.witness == best


def test_record_json_round_trip():
    record = worst_case_reverse(4, 2, "j-trivial", "require")
    data = json.loads(record.to_json())
    assert "wall_time" not in data
    assert SearchRecord.from_dict(data) == record
    assert "wall_time" in record.to_dict(timing=True)
    assert verify_record(SearchRecord.from_dict(data))


def test_verify_record_rejects_tampering():
    record = worst_case_reverse(4, 2)
    assert not verify_record(replace(record, max_reverse_sc=record.max_reverse_sc + 1))
    wrong_mode = "forbid" if dead_states(record.witness) else "require"
    assert not verify_record(replace(record, dead_mode=wrong_mode))
    non_minimal = build_dfa(4, 2, [[1, 1], [2, 2], [3, 3], [3, 3]], 0, [3])
    assert not verify_record(replace(record, witness=non_minimal))


def test_empty_record_when_nothing_qualifies():
    # the empty language is the only one-state language with a dead state
    record = worst_case_reverse(1, 1, dead_mode="require")
    assert record.minimal_count == 1 and record.max_reverse_sc == 1
    assert verify_record(SearchRecord(2, 1, "r-trivial", "any", 0, None, 0, 0))
