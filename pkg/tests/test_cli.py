import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from realschubert import jsonio
from realschubert.cli import main
from realschubert.example import L1, L2, L3, L4, M12, M23
from realschubert.exact import QuadExt, det
from realschubert.projective import Line
from realschubert.schubert import four_lines_solve


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_sharp(capsys):
    code, out, _ = run(capsys, "sharp", "--k", "1", "--n", "4")
    assert code == 0 and out.strip() == "5"


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample")
    rep = json.loads(out)
    assert code == 0
    assert rep["real_count"] == 0
    assert rep["discriminant"] == "-2231979/250000"
    assert rep["quadric"] == "2*x1*x3 - 3*x1*x4 - 3*x2*x3 + 6*x2*x4"
    assert rep["totally_positive"] == {"M12": True, "M23": True}
    # deterministic and seed independent
    code2, out2, _ = run(capsys, "counterexample")
    assert out2 == out


def test_tp_check(capsys, tmp_path):
    code, out, _ = run(capsys, "tp-check", "--matrix", write(tmp_path, "m12.json", jsonio.grid_to_json(M12)))
    assert code == 0 and json.loads(out)["totally_positive"] is True
    ident = [[str(int(i == j)) for j in range(4)] for i in range(4)]
    code, out, _ = run(capsys, "tp-check", "--matrix", write(tmp_path, "id.json", {"matrix": ident}))
    rep = json.loads(out)
    assert rep["totally_positive"] is False and rep["totally_nonnegative"] is True
    assert rep["violation"]["value"] == "0"


def test_tp_check_not_unipotent(capsys, tmp_path):
    code, out, _ = run(capsys, "tp-check", "--matrix", write(tmp_path, "m.json", [["1", "2"], ["3", "1"]]))
    assert code == 1 and "error" in json.loads(out)


def test_fourlines_nonskew(capsys, tmp_path):
    bad = [jsonio.grid_to_json(L1), jsonio.grid_to_json(L1), jsonio.grid_to_json(L2), jsonio.grid_to_json(L4)]
    code, out, _ = run(capsys, "fourlines", "--input", write(tmp_path, "bad_nonskew.json", bad))
    assert code == 1
    assert "lines not pairwise skew" in json.loads(out)["message"]


def test_fourlines_roundtrip(capsys, tmp_path):
    tangents = [[["1", str(t), str(F(t * t, 2)), str(F(t ** 3, 6))], ["0", "1", str(t), str(F(t * t, 2))]]
                for t in (0, 1, 2, 5)]
    code, out, _ = run(capsys, "fourlines", "--input", write(tmp_path, "t.json", {"lines": tangents}))
    rep = json.loads(out)
    assert code == 0 and rep["real_count"] == 2
    radicand = F(rep["radicand"]) if rep["radicand"] else None
    lines = [Line(jsonio.grid_from_json(g)) for g in tangents]
    direct = four_lines_solve(*lines)
    assert F(rep["discriminant"]) == direct.discriminant
    for js, t in zip(rep["transversals"], direct.transversals):
        back = jsonio.grid_from_json(js, radicand)
        assert back == t.span
        for ln in lines:
            assert det(back + ln.span) == 0


def test_scalar_roundtrip():
    for x in (F(0), F(-7, 3), QuadExt(F(1, 2), F(-5, 7), 13)):
        assert jsonio.scalar_from_json(json.loads(json.dumps(jsonio.scalar_to_json(x))), 13) == x


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()
    p = tmp_path / "garbage.json"
    p.write_text("{not json")
    code, _, err = run(capsys, "fourlines", "--input", str(p))
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "fourlines", "--input", write(tmp_path, "short.json", [[["1"]]]))
    assert code == 2
    code, _, _ = run(capsys, "dev-degree", "--trials", "0")
    assert code == 2
    code, _, _ = run(capsys, "sharp", "--k", "4", "--n", "2")
    assert code == 2


def test_reality_scan(capsys):
    code, out, _ = run(capsys, "reality-scan", "--trials", "20", "--seed", "3")
    rep = json.loads(out)
    assert code == 0 and rep["seed"] == 3 and rep["histogram"] == {"2": 20}
    code, out, _ = run(capsys, "reality-scan", "--trials", "5", "--format", "csv")
    assert out.splitlines()[1:] == ["real_count,frequency", "2,5"]


def test_inverse_wronski(capsys):
    code, out, _ = run(capsys, "inverse-wronski", "--roots", "0,1,2,3")
    rep = json.loads(out)
    assert code == 0 and rep["verified"] and rep["real"] and len(rep["subspaces"]) == 2
    code, out, _ = run(capsys, "inverse-wronski", "--roots", "0,1,1,3")
    assert code == 1


def test_wronskian(capsys):
    code, out, _ = run(capsys, "wronskian", "--poly", "1", "--poly", "0,1", "--poly", "0,0,1", "--poly", "0,0,0,1")
    assert json.loads(out)["wronskian"] == {"0": "12"}


def test_rnc_and_tp_random(capsys):
    code, out, _ = run(capsys, "rnc-tangents", "--params", "0,1,2,3")
    assert json.loads(out)["four_lines"]["real_count"] == 2
    code, out, _ = run(capsys, "tp-random", "--m", "5", "--seed", "9")
    rep = json.loads(out)
    assert rep["totally_positive"] and rep["seed"] == 9 and len(rep["word"]) == 10


def test_dev_degree_and_convexity(capsys, tmp_path):
    code, out, _ = run(capsys, "dev-degree", "--curve", "rnc", "--trials", "200", "--seed", "0")
    a = json.loads(out)
    code, out, _ = run(capsys, "dev-degree", "--curve", "rnc", "--trials", "200", "--seed", "0")
    assert json.loads(out) == a and a["maximum"] <= 4 and a["seed"] == 0
    trig = {"kind": "trig", "coords": [{"1": ["1", "0"]}, {"1": ["0", "1"]}, {"2": ["1", "0"]}, {"2": ["0", "1"]}]}
    code, out, _ = run(capsys, "convexity", "--curve", write(tmp_path, "trig.json", trig), "--trials", "10")
    rep = json.loads(out)
    assert rep["verdict"] == "not-convex"
    assert rep["witness"]["hyperplane"] == ["0", "0", "1", "0"]
    assert rep["frenet_determinant"] == {"0": ["18", "0"]}
    rnc = {"kind": "poly", "coords": [{"0": "1"}, {"1": "1"}, {"2": "1/2"}, {"3": "1/6"}]}
    code, out, _ = run(capsys, "convexity", "--curve", write(tmp_path, "rnc.json", rnc), "--trials", "50")
    assert json.loads(out)["verdict"] == "convex-consistent"


def test_seed_env(monkeypatch, capsys):
    monkeypatch.setenv("REALSCHUBERT_SEED", "12")
    code, out, _ = run(capsys, "tp-random")
    assert json.loads(out)["seed"] == 12


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "realschubert", "sharp", "--k", "2", "--n", "5"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "42"
