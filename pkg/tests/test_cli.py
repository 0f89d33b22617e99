import json

import pytest

from cubicsd import cli, dataset


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_feasible_text(capsys):
    code, out = run_cli(capsys, "feasible", "48", "10")
    assert code == 0
    assert "final survivors: 3-(16,0)" in out
    assert "47-(1,1)" in out


def test_feasible_json(capsys):
    code, out = run_cli(capsys, "feasible", "48", "10", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["final_survivors"] == ["3-(16,0)"]
    assert len(obj["bound_survivors"]) == 8


def test_construct_and_wenum(capsys, tmp_path):
    code, out = run_cli(capsys, "construct", "(5,6)(12,14)", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 24
    assert all(len(ln) == 48 for ln in lines)
    path = tmp_path / "code.txt"
    path.write_text(out)
    code, out = run_cli(capsys, "wenum", str(path), "--json")
    assert code == 0
    weights = json.loads(out)["weights"]
    assert weights["10"] == 768
    assert weights["16"] == 267831


def test_equiv_verbs(capsys, tmp_path):
    code, out = run_cli(capsys, "construct", "(5,6)(12,14)", "1")
    a = tmp_path / "a.txt"
    a.write_text(out)
    # reverse all coordinates: an equivalent code
    b = tmp_path / "b.txt"
    b.write_text(
        "\n".join(ln[::-1] for ln in out.strip().splitlines()) + "\n"
    )
    code, out = run_cli(capsys, "equiv", str(a), str(b))
    assert code == 0
    assert "equivalent via" in out


def test_autgroup(capsys, tmp_path):
    code, out = run_cli(capsys, "construct", "(5,6)(12,14)", "1")
    path = tmp_path / "a.txt"
    path.write_text(out)
    code, out = run_cli(capsys, "autgroup", str(path), "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["order"] == 3
    assert obj["generators"]


def test_verify_tables_table1(capsys, tmp_path):
    csv_path = tmp_path / "report.csv"
    code, out = run_cli(
        capsys, "verify-tables", "--table", "1", "--csv", str(csv_path)
    )
    assert code == 0
    assert "5 entries, 5 classes" in out
    assert "known misprint" in out
    assert "overall: PASS" in out
    lines = csv_path.read_text().splitlines()
    assert len(lines) == 6  # header + 5 entries


def test_verify_tables_json_deterministic(capsys):
    code, out1 = run_cli(capsys, "verify-tables", "--table", "1", "--json")
    assert code == 0
    code, out2 = run_cli(capsys, "verify-tables", "--table", "1", "--json")
    assert out1 == out2
    report = json.loads(out1)
    assert report["num_classes"] == 5
    assert report["base_aut_order"]["computed_order"] == 73728


def test_search_sample(capsys):
    code, out = run_cli(
        capsys,
        "search",
        "--xi",
        "1",
        "--sample",
        "300",
        "--seed",
        "1",
        "--no-table-check",
        "--json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["position"] == 300
    assert obj["mode"] == "sample"


def test_error_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("10x\n")
    code = cli.main(["wenum", str(bad)])
    assert code == 2
    code = cli.main(["wenum", str(tmp_path / "missing.txt")])
    assert code == 2


def test_parser_rejects_unknown_xi():
    with pytest.raises(SystemExit):
        cli.build_parser().parse_args(["construct", "(1,2)", "9"])
