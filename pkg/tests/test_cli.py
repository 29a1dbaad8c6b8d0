import json

import pytest

from dessins.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_then_analyze(tmp_path, capsys):
    f = tmp_path / "d28.txt"
    assert run(capsys, "construct", "psl2-27", "-o", str(f))[0] == EXIT_OK
    code, out, _ = run(capsys, "analyze", str(f))
    assert code == EXIT_OK
    assert "genus: 1" in out
    assert "passport: (3^9 1^1, 2^14, 7^4)" in out
    assert "monodromy order: 9828" in out
    assert "cover genus: 118" in out


def test_analyze_one_edge(tmp_path, capsys):
    f = tmp_path / "one.txt"
    f.write_text("degree 1\nx = ()\ny = ()\n")
    code, out, _ = run(capsys, "analyze", str(f), "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["genus"] == 0 and data["regular"]


def test_analyze_json_dessin(tmp_path, capsys):
    f = tmp_path / "trees.json"
    run(capsys, "construct", "fano-trees", "--format", "json", "-o", str(f))
    code, out, _ = run(capsys, "analyze", str(f), "--format", "json")
    rows = json.loads(out)
    assert code == EXIT_OK and [r["monodromy_order"] for r in rows] == [168, 168]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--degree", "7", "--x", "3", "--y", "2", "--z", "7")
    assert code == EXIT_OK and "# 2 dessins" in out


def test_enumerate_budget_is_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--degree", "14", "--x", "3", "--y", "2", "--z", "7^2",
                       "--budget", "10")
    assert code == EXIT_CAP and "cap" in err


def test_census_one_seven(capsys):
    code, out, _ = run(capsys, "census", "--one-seven")
    assert code == EXIT_OK and "# total 4" in out


def test_chartab_and_count(tmp_path, capsys):
    g = tmp_path / "agl.txt"
    run(capsys, "construct", "agl32", "-o", str(g))
    code, out, _ = run(capsys, "chartab", str(g))
    assert code == EXIT_OK and "X.11" in out
    code, out, _ = run(capsys, "count", str(g), "--type", "3,2,7")
    assert code == EXIT_OK and "agree: True" in out


def test_count_classes(tmp_path, capsys):
    g = tmp_path / "psl.json"
    g.write_text(json.dumps({"degree": 7, "generators": ["(1,5,2)(3,4,6)", "(0,4)(1,6)"]}))
    code, out, _ = run(capsys, "count", str(g), "--classes", "3A,2A,7A", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["frobenius"] == 168 == data["brute_force"]


def test_moebius(tmp_path, capsys):
    g = tmp_path / "psl.txt"
    g.write_text("degree 7\n(1,5,2)(3,4,6)\n(0,4)(1,6)\n")
    code, out, _ = run(capsys, "moebius", str(g), "--type", "3,2,7", "--check")
    assert code == EXIT_OK
    assert "phi = 336" in out and "regular dessins = 336/336 = 1" in out


def test_quotient_and_cover(tmp_path, capsys):
    d = tmp_path / "tree.txt"
    d.write_text("degree 7\nx = (1,5,2)(3,4,6)\ny = (0,4)(1,6)\n")
    h = tmp_path / "h.txt"
    h.write_text("degree 7\n(0,1,3)(2,5,4)\n")  # a subgroup of order 3 of the monodromy group
    code, out, _ = run(capsys, "cover", str(d), "--format", "json")
    assert code == EXIT_OK and json.loads(out)["degree"] == 168
    code, out, err = run(capsys, "quotient", str(d), "--subgroup", str(h))
    assert code == EXIT_OK and out.startswith("degree 56")


def test_quotient_rejects_non_subgroup(tmp_path, capsys):
    d = tmp_path / "tree.txt"
    d.write_text("degree 7\nx = (1,5,2)(3,4,6)\ny = (0,4)(1,6)\n")
    h = tmp_path / "h.txt"
    h.write_text("degree 7\n(0,1)\n")
    assert run(capsys, "quotient", str(d), "--subgroup", str(h))[0] == EXIT_USAGE


def test_cover_cap(tmp_path, capsys):
    d = tmp_path / "tree.txt"
    d.write_text("degree 7\nx = (1,5,2)(3,4,6)\ny = (0,4)(1,6)\n")
    assert run(capsys, "cover", str(d), "--degree-cap", "100")[0] == EXIT_CAP


def test_verify_belyi(capsys):
    code, out, _ = run(capsys, "verify-belyi")
    assert code == EXIT_OK and out.count("[PASS]") == 5


def test_check_subset_and_alias(capsys):
    code, out, _ = run(capsys, "check", "--only", "1,2,10,13,14")
    assert code == EXIT_OK
    assert "5/5 checks passed" in out
    code, out, _ = run(capsys, "paper-check", "--only", "13")
    assert code == EXIT_OK and "1/1 checks passed" in out


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as e:
        main(["bogus"])
    assert e.value.code == EXIT_USAGE
    assert run(capsys, "analyze", str(tmp_path / "missing.txt"))[0] == EXIT_USAGE
    bad = tmp_path / "bad.txt"
    bad.write_text("degree 3\nx = (0,1)\ny = (1,2)\nz = (0,2,1)\n")  # x y z != 1
    assert run(capsys, "analyze", str(bad))[0] == EXIT_USAGE


def test_config_file(tmp_path, capsys, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "json"}))
    monkeypatch.setenv("DESSINS_CONFIG", str(cfg))
    code, out, _ = run(capsys, "verify-belyi")
    assert code == EXIT_OK and json.loads(out)["passed"]
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(capsys, "verify-belyi")[0] == EXIT_USAGE


def test_dot_output(capsys):
    code, out, _ = run(capsys, "construct", "psl2-7", "--format", "dot")
    assert code == EXIT_OK and out.startswith("graph")


def test_failed_check_exit_code(monkeypatch, capsys):
    from dessins import checks

    def broken(L, workers):
        L.expect("something", 1, 2)

    monkeypatch.setattr(checks, "CHECKS", [(99, "deliberately failing", broken)])
    code, out, _ = run(capsys, "paper-check")
    assert code == EXIT_FAIL and "0/1" in out
