import json

import numpy as np
import pytest

from clifftest import cli, serialize

T_GATE = np.diag([1.0, np.exp(1j * np.pi / 4)])


@pytest.fixture
def t_json(tmp_path):
    path = tmp_path / "T.json"
    path.write_text(json.dumps(serialize.unitary_to_json(T_GATE)))
    return str(path)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_pacc_exact(t_json, capsys):
    code, out = run(["pacc", "--input", t_json, "--exact"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["pacc_exact"] == pytest.approx(0.75)


def test_test4_requires_seed(t_json, capsys):
    code = cli.main(["test4", "--input", t_json, "--shots", "10"])
    assert code == cli.EXIT_USAGE


def test_test4_deterministic(t_json, capsys):
    argv = ["test4", "--input", t_json, "--shots", "300", "--seed", "9"]
    c1, o1 = run(argv, capsys)
    c2, o2 = run(argv, capsys)
    assert c1 == c2 == 0
    m1, m2 = json.loads(o1), json.loads(o2)
    assert m1["content_hash"] == m2["content_hash"]
    del m1["timestamp"], m2["timestamp"]
    assert m1 == m2


def test_sctest_runs(t_json, capsys):
    code, out = run(
        ["sctest", "--input", t_json, "--epsilon", "0.2", "--seed", "4"], capsys
    )
    assert code == 0
    res = json.loads(out)["results"]
    assert res["verdict"] in ("accept", "reject")
    assert res["shots_used"] == res["shots_used"]


def test_budget_exit_code(tmp_path, capsys):
    big = tmp_path / "big.json"
    big.write_text(json.dumps(serialize.unitary_to_json(np.eye(16, dtype=complex))))
    code = cli.main(["pacc", "--input", str(big), "--exact"])
    assert code == cli.EXIT_BUDGET


def test_missing_input_is_usage_error(capsys):
    code = cli.main(["pacc", "--input", "/nonexistent/U.json"])
    assert code == cli.EXIT_USAGE


def test_unknown_suite_is_usage_error(capsys):
    code = cli.main(["verify", "--suite", "bogus", "--seed", "0"])
    assert code == cli.EXIT_USAGE


def test_verify_appendix_suite(capsys):
    code, out = run(["verify", "--suite", "appendixA", "--seed", "0"], capsys)
    assert code == 0
    manifest = json.loads(out)
    assert manifest["summary"]["failed"] == 0
    assert all(r["passed"] for r in manifest["results"])


def test_norms_command(t_json, capsys):
    code, out = run(["norms", "--input", t_json, "--k", "3"], capsys)
    assert code == 0
    v = json.loads(out)["results"]["value"]
    assert abs(v ** 8 - 0.75) < 1e-9


def test_discriminate_default_strategy(capsys):
    code, out = run(["discriminate", "--t", "2"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert res["group_vs_weingarten"] < 1e-8
    assert abs(sum(res["clifford"].values()) - 1.0) < 1e-9


def test_commutant_enum_report(capsys):
    code, out = run(["commutant", "enum", "--t", "3", "--check-all"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert res["count"] == 6
    assert res["invariants_passed"] is True
    assert all("S" in entry and "O" in entry for entry in res["per_code"])


def test_report_roundtrip(t_json, tmp_path, capsys):
    out_path = tmp_path / "run.json"
    code = cli.main(
        ["pacc", "--input", t_json, "--exact", "--output", str(out_path)]
    )
    assert code == 0
    code, out = run(["report", "--input", str(out_path)], capsys)
    assert code == 0
    assert json.loads(out)["results"]["pacc_exact"] == pytest.approx(0.75)
    code, out = run(
        ["report", "--input", str(out_path), "--format", "csv"], capsys
    )
    assert code == 0
    assert "pacc_exact" in out


def test_report_missing_manifest(capsys):
    code = cli.main(["report", "--input", "/nonexistent/run.json"])
    assert code == cli.EXIT_USAGE


def test_report_chardist_csv(tmp_path, capsys):
    from clifftest import densesim

    d = densesim.char_dist_state(np.array([1.0, 0.0], dtype=complex))
    path = tmp_path / "dist.json"
    path.write_text(
        json.dumps({"kind": "state", "n": 1, "table": d.table.tolist()})
    )
    code, out = run(["report", "--input", str(path), "--format", "csv"], capsys)
    assert code == 0
    assert len(out.strip().splitlines()) == 5  # header + 2^{2n} rows
