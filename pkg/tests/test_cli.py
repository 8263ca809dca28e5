import json

import pytest

from porev import cli
from porev.automata import build_dfa
from porev.io import dfa_from_dot, dfa_from_json, dfa_to_json
from porev.witnesses import fig2_witness


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def fig2_file(tmp_path):
    path = tmp_path / "fig2.json"
    path.write_text(dfa_to_json(fig2_witness(5)))
    return path


def test_classify_text(capsys, fig2_file):
    code, out, _ = run(capsys, "classify", str(fig2_file))
    assert code == 0
    assert "sc: 5\n" in out and "reverse_sc: 8\n" in out
    assert "r_trivial: yes" in out and "j_trivial: no" in out
    for method in ("reverse-po", "simon", "trahtman"):
        assert f"j_trivial[{method}]: no" in out


def test_classify_json(capsys, fig2_file):
    code, out, _ = run(capsys, "classify", str(fig2_file), "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["sc"] == 5 and report["partially_ordered"] is True


def test_classify_reads_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "witness", "--family", "fig5", "--n", "5", "--format", "dot")
    path = tmp_path / "w.dot"
    path.write_text(out)
    code, out, _ = run(capsys, "classify", str(path))
    assert code == 0 and "reverse_sc: 15" in out and "j_trivial: yes" in out


def test_witness_json(capsys):
    code, out, _ = run(capsys, "witness", "--family", "table1", "--n", "7")
    data = json.loads(out)
    assert code == 0 and data["sc"] == 7 and data["reverse_sc"] == 34
    assert dfa_from_json(out).state_count == 7


def test_witness_bad_n(capsys):
    code, _, err = run(capsys, "witness", "--family", "fig2", "--n", "2")
    assert code == 2 and "invalid input" in err


def test_bound(capsys):
    assert run(capsys, "bound", "--family", "r", "--n", "7", "--k", "2")[1] == "34\n"
    assert run(capsys, "bound", "--family", "j", "--n", "7", "--k", "2")[1] == "38\n"
    assert run(capsys, "bound", "--family", "j", "--n", "7", "--k", "3")[1] == "unknown\n"


def test_regex(capsys, tmp_path):
    code, out, _ = run(capsys, "regex", "a*b(a+b)*", "--format", "text")
    assert code == 0 and out == "sc: 2\nreverse_sc: 2\n"
    target = tmp_path / "r.dot"
    code, _, _ = run(capsys, "regex", "x*y", "--alphabet", "x,y", "--format", "dot", "-o", str(target))
    assert code == 0 and dfa_from_dot(target.read_text()).letter_names() == ("x", "y")


def test_regex_syntax_error(capsys):
    code, _, err = run(capsys, "regex", "a+(b")
    assert code == 2 and "position 4" in err


def test_search(capsys, tmp_path):
    tsv = tmp_path / "rows.tsv"
    wit = tmp_path / "w.json"
    code, out, err = run(capsys, "search", "--n", "4", "--k", "2", "--dead", "require",
                         "--tsv", str(tsv), "--witness-out", str(wit))
    record = json.loads(out)
    assert code == 0 and record["max_reverse_sc"] == 7 and "wall time" in err
    assert dfa_from_json(wit.read_text()) == dfa_from_json(json.dumps(record["witness"]))
    rows = tsv.read_text().splitlines()
    assert rows[0].split("\t")[0] == "n"
    assert rows[1].split("\t") == ["4", "7", "7", "7", "4", str(wit)]


def test_search_guard(capsys):
    code, _, err = run(capsys, "search", "--n", "13")
    assert code == 2 and "n <= 12" in err


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "bound", "--family", "x", "--n", "3", "--k", "2")[0] == 1
    assert run(capsys, "search", "--n", "3", "--jobs", "0")[0] == 1
    assert run(capsys, "reproduce-table1", "--max-n", "1")[0] == 1


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read" in err


def test_convert_round_trip(capsys, tmp_path, fig2_file):
    dot = tmp_path / "a.dot"
    back = tmp_path / "b.json"
    assert run(capsys, "convert", str(fig2_file), "-o", str(dot))[0] == 0
    assert run(capsys, "convert", str(dot), "-o", str(back))[0] == 0
    assert dfa_from_json(back.read_text()) == fig2_witness(5)
    assert run(capsys, "convert", str(fig2_file))[0] == 1
    code, out, _ = run(capsys, "convert", str(fig2_file), "--to", "dot")
    assert code == 0 and out.startswith("digraph")


def test_reproduce_table1(capsys, tmp_path):
    code, out, _ = run(capsys, "reproduce-table1", "--max-n", "5", "--out-dir", str(tmp_path))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert [line.split("\t")[1:3] for line in lines[1:]] == [["2", "2"], ["4", "4"], ["7", "7"], ["12", "12"]]
    saved = json.loads((tmp_path / "table1_n5.json").read_text())
    assert saved["forbid"]["max_reverse_sc"] == 12


def test_invariant_violation_exit(capsys, fig2_file, monkeypatch):
    calls = iter([True, False, True])
    monkeypatch.setattr(cli, "is_j_trivial", lambda dfa, method: next(calls))
    code, _, err = run(capsys, "classify", str(fig2_file))
    assert code == 3 and "disagree" in err
    assert '"states": 5' in err


def test_search_invariant_exit(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_record", lambda record: False)
    code, _, err = run(capsys, "search", "--n", "3")
    assert code == 3 and "re-verification" in err


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(dfa_to_json(build_dfa(1, 1, [[0]], 0, []))))
    code, out, _ = run(capsys, "classify", "-")
    assert code == 0 and "reverse_sc: 1" in out
