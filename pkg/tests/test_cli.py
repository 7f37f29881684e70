import json
import subprocess
import sys

import pytest

from posetbalance.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_figure(capsys):
    assert run(capsys, "count", "--figure", "fig1") == (0, "15\n", "")


def test_matrix_csv(capsys):
    code, out, _ = run(capsys, "matrix", "--figure", "fig1")
    assert code == 0
    assert out.splitlines()[0] == "0,9,15,15,15,15"
    assert len(out.splitlines()) == 6


def test_matrix_methods_agree(capsys):
    _, a, _ = run(capsys, "matrix", "--perm", "41325", "--json")
    _, b, _ = run(capsys, "matrix", "--perm", "41325", "--json", "--method", "augment")
    assert json.loads(a) == json.loads(b)


def test_balance_json_with_alpha(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"n": 3, "covers": [[1, 2]]}))
    code, out, _ = run(capsys, "balance", "--input", str(path), "--alpha", "1/3", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["delta"] == "1/3"
    assert data["alpha_balanced_pairs"] == [{"pair": [1, 3], "prob": "2/3"}, {"pair": [2, 3], "prob": "1/3"}]


def test_detect_perm(capsys):
    code, out, _ = run(capsys, "detect", "--perm", "41325", "--json", "--verify")
    data = json.loads(out)
    assert code == 0 and data["verified"]
    assert {"kind": "inversion_pattern_pair", "pair": [3, 2], "bound": "1/2"} in data["certificates"]


def test_shape_command(capsys):
    code, out, _ = run(capsys, "shape", "--shape", "4,4,2", "--json")
    data = json.loads(out)
    assert data["syt"] == 252
    assert data["hooks"] == [[6, 5, 3, 2], [5, 4, 2, 1], [2, 1]]
    assert data["pair"] == [[1, 2], [2, 1]]
    code, out, _ = run(capsys, "shape", "--skew", "9,7,7,5,5,5,5/6,5,3,3,3,2", "--json")
    assert json.loads(out)["pair"] == [[1, 7], [2, 6]]
    code, out, _ = run(capsys, "shape", "--skew", "8,6,5,3,2/6,3", "--shifted", "--json")
    assert json.loads(out)["pair"] == [[2, 5], [3, 3]]


def test_lattice_commands(capsys):
    code, out, _ = run(capsys, "lattice", "subspace", "--n", "2", "--q", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["size"] == 6 and data["prob"] == "1/2"
    code, out, _ = run(capsys, "lattice", "ideals", "--figure", "fig6-P", "--json")
    assert json.loads(out)["e"] == 14


def test_search_min_delta(capsys):
    code, out, _ = run(capsys, "search", "min-delta", "--n", "7", "--json")
    assert json.loads(out)["min_delta"] == "14/39"


def test_search_scan(capsys, tmp_path):
    code, out, _ = run(capsys, "search", "scan", "--n", "5", "--json", "--records", str(tmp_path / "r.jsonl"))
    assert code == 0
    assert json.loads(out)["total"] == 63
    assert len((tmp_path / "r.jsonl").read_text().splitlines()) == 63


def test_repro_json(capsys):
    code, out, _ = run(capsys, "repro", "fig11", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    checks = data["targets"][0]["checks"]
    assert [c["computed"] for c in checks] == ["6/17", "20/57", "37/106"]


def test_repro_is_deterministic(capsys):
    _, a, _ = run(capsys, "repro", "fig1", "--json")
    _, b, _ = run(capsys, "repro", "fig1", "--json")
    assert a == b


def test_export_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "export-dot", "--figure", "T")
    assert code == 0 and "1 -> 2;" in out
    target = tmp_path / "t.dot"
    run(capsys, "export-dot", "--shape", "2,2", "-o", str(target))
    assert target.read_text().startswith('digraph "P"')


@pytest.mark.parametrize("argv,needle", [
    (["count"], "give a poset"),
    (["count", "--perm", "4135"], "permutation"),
    (["count", "--input", "/does/not/exist.json"], "No such file"),
    (["count", "--figure", "nope"], "unknown figure"),
    (["shape", "--shape", "2,3"], "not weakly decreasing"),
    (["shape", "--skew", "4,4"], "outer/inner"),
    (["balance", "--figure", "T", "--alpha", "3/4"], "alpha"),
    (["balance", "--figure", "T", "--alpha", "x"], "Invalid literal"),
    (["count", "--figure", "fig11-B", "--max-n", "5"], "refusing"),
    (["search", "scan", "--n", "9"], "refusing"),
    (["lattice", "boolean", "--n", "6"], "refusing"),
    (["lattice", "subspace", "--n", "2", "--q", "4"], "prime"),
])
def test_malformed_input_fails_cleanly(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code != 0
    assert needle.lower() in err.lower()


def test_bad_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 2, "covers": [[1, 2], [2, 1]]}')
    code, _, err = run(capsys, "count", "--input", str(path))
    assert code == 2 and "cycle" in err
    path.write_text("not json")
    code, _, err = run(capsys, "count", "--input", str(path))
    assert code == 2


def test_unknown_subcommand_exits_nonzero():
    proc = subprocess.run([sys.executable, "-m", "posetbalance", "frobnicate"], capture_output=True, text=True)
    assert proc.returncode != 0
    assert "invalid choice" in proc.stderr


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "posetbalance", "repro", "fig2-T"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("[PASS] fig2-T")
