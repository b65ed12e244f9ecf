import json

import numpy as np
import pytest
from scipy.io import mmread

from hyperspec import cli, verify
from hyperspec.families import generate
from hyperspec.hypergraph import Hypergraph
from hyperspec.spectral import alpha_matrix, signless_laplacian, spectral_radius


@pytest.fixture
def p4(tmp_path):
    path = tmp_path / "p4.json"
    assert cli.main(["gen", "P_n", "--params", "n=4", "--out", str(path)]) == 0
    return path


def test_gen_writes_family_json(capsys):
    assert cli.main(["gen", "S_nk", "--params", "n=7,k=3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert Hypergraph.from_dict(data) == generate("S_nk", n=7, k=3)
    assert data["family"] == {"tag": "S_nk", "params": {"n": 7, "k": 3}}


def test_rho_p4(p4, capsys):
    assert cli.main(["rho", str(p4), "--alpha", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "rho 1.6180339887"
    assert out[1].startswith("residual ") and out[2].startswith("iterations ")


@pytest.mark.parametrize("tag,params", [("D_nkc", "n=9,k=3,c=1"), ("U2_n", "n=6"), ("Hp_n", "p=2,n=6")])
@pytest.mark.parametrize("alpha", ["0", "0.25", "0.9"])
def test_gen_rho_round_trip(tmp_path, capsys, tag, params, alpha):
    path = tmp_path / "g.json"
    cli.main(["gen", tag, "--params", params, "--out", str(path)])
    assert cli.main(["rho", str(path), "--alpha", alpha, "--vector"]) == 0
    lines = capsys.readouterr().out.splitlines()
    res = spectral_radius(Hypergraph.from_json(path.read_text()), float(alpha))
    assert lines[0] == f"rho {cli.fmt(res.rho)}"
    assert lines[3] == "vector " + " ".join(cli.fmt(float(x)) for x in res.vector)


def test_sweep_csv(p4, capsys):
    assert cli.main(["sweep", str(p4), "--alpha-grid", "0:0.9:0.1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "alpha,rho,iterations,residual"
    assert len(lines) == 11
    rhos = [float(l.split(",")[1]) for l in lines[1:]]
    assert rhos == sorted(rhos)
    assert lines[1].split(",")[1] == "1.6180339887"


def test_parse_grid():
    assert cli.parse_grid("0:0.5:0.25") == [0.0, 0.25, 0.5]
    with pytest.raises(cli.UsageError):
        cli.parse_grid("0:1:0.5")
    with pytest.raises(cli.UsageError):
        cli.parse_grid("0:0.5")


def test_graft(p4, capsys, tmp_path):
    desc = tmp_path / "d.json"
    desc.write_text(json.dumps({"kind": "SubdivideEdge", "u": 1, "v": 2}))
    assert cli.main(["graft", str(p4), str(desc), "--alpha", "0.5"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert Hypergraph.from_dict(data["result"]).n == 5
    assert data["rho_result"] > data["rho_source"]
    assert "rho source" in captured.err
    assert cli.main(["graft", str(p4), '{"kind": "DetachVertex", "e": [0, 1], "w2": 1, "w1": 0}']) == 2


def test_enum(capsys):
    assert cli.main(["enum", "Trees", "--params", "n=7", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "11"
    assert cli.main(["enum", "UniformHypertrees", "--params", "k=3,m=3", "--jobs", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2 and all("code" in json.loads(l) for l in lines)
    assert cli.main(["enum", "PendantConstrained", "--params", "p=2", "--base", "Hypertrees",
                     "--base-params", "n=5", "--count-only"]) == 0
    assert int(capsys.readouterr().out) > 0
    assert cli.main(["enum", "PendantConstrained", "--params", "p=2"]) == 2


def test_verify_command(capsys):
    assert cli.main(["verify", "T5.4", "--n", "6", "--alpha", "0.25"]) == 0
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    assert data["summary"]["fail"] == 0
    assert any("C_n(n=6)" in c["instance"] and c["verdict"] == "pass" for c in data["checks"])
    assert "T5.4" in captured.err


def test_verify_failure_exit_code(monkeypatch, capsys):
    def fake_run(theorem, alphas=None, **kw):
        return verify.VerificationReport([verify.TheoremCheck("T4.1", "x", 0.0, 1.0, 2.0, -1.0, "fail")])
    monkeypatch.setattr(verify, "run", fake_run)
    assert cli.main(["verify", "T4.1"]) == 1


def test_export(p4, tmp_path):
    out = tmp_path / "q.mtx"
    assert cli.main(["export", str(p4), "--matrix", "Q", "--out", str(out)]) == 0
    hg = generate("P_n", n=4)
    assert np.allclose(mmread(str(out)).toarray(), signless_laplacian(hg))
    assert cli.main(["export", str(p4), "--matrix", "Aalpha", "--alpha", "0.3", "--out", str(out)]) == 0
    assert np.allclose(mmread(str(out)).toarray(), alpha_matrix(hg, 0.3))


def test_usage_errors(p4, tmp_path, capsys):
    assert cli.main(["rho", str(p4), "--alpha", "1.0"]) == 2
    assert cli.main(["gen", "S_nk", "--params", "n=8,k=3"]) == 2
    assert cli.main(["gen", "S_nk", "--params", "n=8;k=3"]) == 2
    assert cli.main(["frobnicate"]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "edges": [[0]]}')
    assert cli.main(["rho", str(bad)]) == 2
    bad.write_text("not json")
    assert cli.main(["rho", str(bad)]) == 2
    assert cli.main(["rho", str(tmp_path / "missing.json")]) == 2
    err = capsys.readouterr().err
    assert "EdgeTooSmall" in err


def test_no_convergence_exit_code(p4, capsys):
    assert cli.main(["rho", str(p4), "--max-iter", "2"]) == 3
    assert "did not reach" in capsys.readouterr().err
