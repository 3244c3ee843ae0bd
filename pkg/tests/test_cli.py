import json

import pytest

from edgeideal import __version__
from edgeideal.cli import main
from edgeideal.graph import write_graph6
from edgeideal.search import all_graphs_upto


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_fig1(capsys):
    code, out, _ = run(capsys, "compute", "--name", "fig1", "--reg", "q,f2")
    assert code == 0
    assert "v = 3" in out and "deg_h = 2" in out
    assert "hilbert_series = (1 + 8*t + 11*t^2)/(1-t)^3" in out
    assert "reg_q = 2" in out and "reg_f2 = 3" in out


def test_compute_k2_json(capsys):
    code, out, _ = run(capsys, "compute", "--g6", "A_", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["version"] == __version__ and len(data["input_digest"]) == 64
    (g,) = data["graphs"]
    assert (g["v"], g["deg_h"], g["v_witness"]) == (1, 1, [0])


def test_compute_hvd(capsys):
    code, out, _ = run(capsys, "compute", "--name", "hvd", "--v", "4", "--d", "7")
    assert code == 0 and "v = 4" in out and "deg_h = 7" in out


def test_compute_errors(capsys):
    assert run(capsys, "compute", "--g6", "A")[0] == 2
    assert run(capsys, "compute", "--name", "nope")[0] == 2
    assert run(capsys, "compute", "--g6", "A_", "--reg", "f4")[0] == 2
    assert run(capsys, "compute", "--name", "hn_thm35", "--n", "2", "--reg", "q")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_construct_sidecar(capsys, tmp_path):
    out_path = tmp_path / "h2.g6"
    code, out, _ = run(capsys, "construct", "--family", "thm35", "--n", "2", "--out", str(out_path))
    assert code == 0
    side = json.loads((tmp_path / "h2.g6.json").read_text())
    assert side["predicted"] == {"dim": 6, "deg_h": 5, "v": 6}
    assert out_path.read_text().strip() == out.strip() == side["graph6"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "thm42", "--nmax", "7"],
        ["verify", "thm41", "--nmax", "6"],
        ["verify", "thm31", "--nmax", "7"],
        ["verify", "thm36", "--range", "1:6"],
        ["verify", "lemma32", "--family", "thm35", "--n", "2"],
        ["verify", "lemma34", "--family", "thm35", "--n", "2"],
        ["verify", "appendixA", "--nmax", "6"],
        ["verify", "conjecture2vd", "--nmax", "7"],
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert out.strip().endswith("ok")


def test_verify_thm42_json_lists_star_equality_class(capsys):
    code, out, _ = run(capsys, "verify", "thm42", "--nmax", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["violations"] == 0
    assert set(data["equality_graphs"]) == {"A_", "BW", "CF", "CK", "D?{", "D_K"}


def test_verify_needs_file_beyond_builtin_range(capsys):
    assert run(capsys, "verify", "thm31", "--nmax", "8")[0] == 2
    assert run(capsys, "verify", "thm31", "--nmax", "8", "--file", "/nonexistent.g6")[0] == 2


def test_verify_reports_violation_exit_code(capsys, tmp_path):
    # A "census" of n = 8 holding only K_8 cannot reproduce the n = 8 panel.
    from edgeideal.graph import complete_graph

    src = tmp_path / "n8.g6"
    src.write_text(write_graph6(complete_graph(8)) + "\n")
    code, out, _ = run(capsys, "verify", "appendixA", "--nmax", "8", "--file", str(src))
    assert code == 1
    assert "n=8: MISMATCH" in out


def test_scan_and_scatter(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("".join(write_graph6(g) + "\n" for g in all_graphs_upto(4)))
    out = tmp_path / "out.csv"
    assert run(capsys, "scan", "--file", str(src), "--out", str(out), "--workers", "2", "--checkpoint")[0] == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("graph6,n,m,connected") and len(lines) == 19
    code, text, _ = run(capsys, "scan", "--file", str(src), "--format", "json", "--workers", "1")
    assert code == 0 and len(text.splitlines()) == 18
    code, text, _ = run(capsys, "scatter", "--n", "4")
    assert text.splitlines() == ["n,v,deg_h,count", "4,1,1,2", "4,1,2,3", "4,1,3,1"]
    assert run(capsys, "scatter", "--n", "9")[0] == 2


def test_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("EIL_WORKERS", "zero")
    assert run(capsys, "scatter", "--n", "3")[0] == 2
    monkeypatch.setenv("EIL_WORKERS", "2")
    assert run(capsys, "scatter", "--n", "3")[0] == 0
