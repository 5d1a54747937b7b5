import csv
import io
import json

import pytest

from valkit import cli
from valkit.certify import CertReport
from valkit.errors import ParseError


def run(argv):
    buf = io.StringIO()
    code = cli.main(argv, buf)
    return code, buf.getvalue()


def test_parse_literals():
    assert cli.parse_word("[1, 2,2 ,1]").letters == (1, 2, 2, 1)
    assert cli.parse_word("3").letters == (3,)
    for bad in ("[1,0]", "[]", "[1;2]", "abc"):
        with pytest.raises(ParseError):
            cli.parse_word(bad)
    s = cli.parse_surd("(1+1*sqrt(3))/2")
    assert abs(float(s) - (1 + 3**0.5) / 2) < 1e-15
    for bad in ("(1+sqrt(4))/2", "1+sqrt(3)", "(1+1*sqrt(3))/0"):
        with pytest.raises(ParseError):
            cli.parse_surd(bad)


def test_val_word_and_surd():
    code, out = run(["val", "--word", "[1,1]"])
    assert code == 0 and abs(json.loads(out)["re_val"] - 706.3248135408132) < 1e-6
    code, out = run(["val", "--surd", "(1+1*sqrt(3))/2", "--method", "both"])
    data = json.loads(out)
    assert code == 0 and data["cf"]["period"] == [1, 2]
    assert abs(data["formula"]["re_val"] - 709.792359008031) < 1e-8
    assert data["difference"] < 1e-8
    code, out = run(["val", "--word", "[3,1]", "--f", "one"])
    assert abs(json.loads(out)["re_val"] - 1) < 1e-10


def test_coeffs():
    code, out = run(["coeffs", "--n-max", "4"])
    data = json.loads(out)
    assert code == 0 and data["-1"] == 1 and data["0"] == 744 and data["2"] == 21493760


def test_plot_csv_roundtrip():
    code, out = run(["plot", "--figure", "4", "--n", "11"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["x", "Z_pi_3", "Z_5pi_12", "Z_pi_2"] and len(rows) == 12
    code, out = run(["plot", "--kernel", "Z", "--x", "phi:2", "--t", "pi/3:pi/2", "--n", "3"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and abs(float(rows[1][2])) < 1e-14


def test_tree_json():
    code, out = run(["tree", "--depth", "1"])
    data = json.loads(out)
    assert code == 0 and data["violations"] == []
    assert data["tree"]["word"] == [2, 2, 1, 1] and len(data["tree"]["children"]) == 2


def test_exit_codes(tmp_path, monkeypatch, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["val"])
    assert exc.value.code == 1
    assert run(["val", "--word", "[1,0]"])[0] == 1
    assert run(["plot", "--kernel", "nope"])[0] == 1
    bad = tmp_path / "f.json"
    bad.write_text(json.dumps({"pole_order": 1, "coeffs": [1, -5000]}))
    assert run(["val", "--word", "[1,1]", "--f", str(bad)])[0] == 2
    assert "HypothesisViolation" in capsys.readouterr().err
    monkeypatch.setattr(cli, "BOUND_TOL", -1.0)
    assert run(["tree", "--depth", "0"])[0] == 3


def test_certify_exit_codes(tmp_path, monkeypatch):
    out_json = tmp_path / "r.json"
    code, out = run(["certify", "--suite", "Z", "--grid", "64", "--json", str(out_json)])
    assert code == 0 and "0 failed" in out
    assert all(r["verdict"] != "fail" for r in json.loads(out_json.read_text()))
    import valkit.certify as certify

    monkeypatch.setattr(certify, "run_suite", lambda *a, **k: [CertReport("x", "min", (0, 0), -1.0, "fail")])
    assert run(["certify", "--suite", "Z"])[0] == 3
