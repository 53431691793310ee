import json
import subprocess
import sys

from hgraph import fixtures
from hgraph.cli import main
from hgraph.core_graph import cycle_graph, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_validate_flags(capsys):
    code, out = run(capsys, "validate", "--fixture", "fig1a", "--proper", "--non-crossing")
    assert code == 0 and out["proper"] and out["non_crossing"]
    code, out = run(capsys, "validate", "--fixture", "fig1b", "--proper")
    assert code == 1 and not out["proper"] and "proper_witness" in out


def test_build_then_check(capsys, tmp_path):
    cert = str(tmp_path / "cert.json")
    code, out = run(capsys, "build-mixed-thin", "--fixture", "fig3-claw-c2", "-o", cert)
    assert code == 0 and out["verified"] and out["classes"] <= out["bound"]
    code, out = run(capsys, "check-cert", "--fixture", "fig3-claw-c2", cert, "--kind", "proper-mixed")
    assert code == 0 and out["ok"]


def test_circular_build(capsys, tmp_path):
    src = write(tmp_path, "arcs.json", fixtures.proper_arc_rep(10, 3).to_json())
    code, out = run(capsys, "build-mixed-thin", src, "--circular")
    assert code == 0 and out["verified"] and out["classes"] <= 2


def test_check_thin_certificate_from_graph_fixture(capsys, tmp_path):
    g, thin = fixtures.fig2()
    cert = write(tmp_path, "thin.json", thin.to_json())
    code, out = run(capsys, "check-cert", "--fixture", "fig2", cert)
    assert code == 0 and out["kind"] == "thin" and out["classes"] == 3
    bad = write(tmp_path, "bad.json", {"order": list(thin.order), "classes": [list(thin.order)]})
    code, out = run(capsys, "check-cert", "--fixture", "fig2", bad)
    assert code == 1 and out["violation"]


def test_tree_thin(capsys):
    code, out = run(capsys, "tree-thin", "--fixture", "fig1d")
    assert code == 0 and out["verified"] and out["classes"] <= out["bound"]


def test_properize_and_reduce(capsys):
    code, out = run(capsys, "properize", "--fixture", "fig1b")
    assert code == 0 and out["proper"] and out["same_graph"]
    code, out = run(capsys, "reduce-is", "--fixture", "fig1b", "-k", "2")
    assert out["answer"] == "yes" and len(out["witness"]) == 2
    code, out = run(capsys, "reduce-is", "--fixture", "fig1b", "-k", "9")
    assert out["answer"] == "reduced" and out["parameter"] < out["parameter_bound"]


def test_order_fig6(capsys):
    code, out = run(capsys, "order", "--fixture", "fig6", "--matrix")
    assert code == 0 and out["order"] == ["u", "v"] and out["matrix"] == "0110"


def test_twin_width_and_sequence(capsys, tmp_path):
    g = write(tmp_path, "c5.json", cycle_graph(5).to_json())
    code, out = run(capsys, "tww", g)
    assert code == 0 and out["twin_width"] == 2
    seq = write(tmp_path, "seq.json", {"sequence": out["sequence"]})
    assert run(capsys, "check-seq", g, seq, "-d", "2")[0] == 0
    assert run(capsys, "check-seq", g, seq, "-d", "1")[0] == 1
    assert run(capsys, "tww", g, "--max-n", "4")[0] == 3


def test_fo(capsys, tmp_path):
    g = write(tmp_path, "p4.json", path_graph(4).to_json())
    code, out = run(capsys, "fo", g, "--problem", "independent_set", "-k", "2")
    assert code == 0 and out["holds"]
    code, out = run(capsys, "fo", g, "--formula", "exists x. forall y. E(x,y) or x=y")
    assert code == 0 and not out["holds"]
    code, out = run(capsys, "fo", g, "--formula", "exists x. (E(x,x)")
    assert code == 2 and out["error"]


def test_demo_and_fixture_listing(capsys):
    code, out = run(capsys, "demo")
    assert code == 0 and out["certificate_verified"]
    code, out = run(capsys, "fixtures")
    assert set(out["fixtures"]) == set(fixtures.CATALOG)
    code, out = run(capsys, "fixtures", "--show", "fig5")
    assert "sets" in out


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "validate", "--fixture", "nope")[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "validate", str(junk))[0] == 2


def test_unknown_subcommand_exits_two(capsys):
    assert main(["frobnicate"]) == 2


def test_console_script_runs():
    res = subprocess.run([sys.executable, "-m", "hgraph.cli", "fixtures"], capture_output=True, text=True)
    assert res.returncode == 0 and "fig6" in res.stdout
