import json
from pathlib import Path

import pytest

from pathpers.cli import main

GOLDEN = Path(__file__).parent / "golden"
EDGES = str(GOLDEN / "bifiltered_four_cycle.edges.json")
PATH = str(GOLDEN / "bifiltered_four_cycle.path.json")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert "pathpers" in capsys.readouterr().out


def test_transform_two_points(tmp_path, capsys):
    (tmp_path / "h.txt").write_text("1\n")
    (tmp_path / "a.json").write_text('{"dimension":1,"points":[{"id":0,"grades":[[1]]},{"id":1,"grades":[[2]]}]}')
    (tmp_path / "p.json").write_text("[[1,1],[2,1]]")
    code, out = run(capsys, "transform", "--matrix", tmp_path / "h.txt", "--annotations", tmp_path / "a.json",
                    "--path", tmp_path / "p.json", "--output", "-")
    assert code == 0 and out == "2\n"


def test_non_monotone_path(tmp_path, caplog):
    (tmp_path / "p.json").write_text("[[2,2],[1,1]]")
    code = main(["transform", "--edges", EDGES, "--path", str(tmp_path / "p.json")])
    assert code == 3
    assert "steps 1 -> 2" in caplog.text


def test_missing_file(capsys):
    code, _ = run(capsys, "transform", "--edges", "/nonexistent.json", "--path", PATH)
    assert code == 2


def test_barcode_golden(capsys):
    code, out = run(capsys, "barcode", GOLDEN / "four_cycle.txt", "--max-dim", 2, "--reps")
    assert code == 0 and out == (GOLDEN / "four_cycle.barcode.json").read_text()
    dim1 = [b for b in json.loads(out)["bars"] if b["dim"] == 1]
    assert len(dim1) == 1


def test_barcode_threshold_zero(capsys):
    code, out = run(capsys, "barcode", GOLDEN / "four_cycle.txt", "--threshold", 0)
    bars = json.loads(out)["bars"]
    assert code == 0 and {(b["dim"], b["birth"], b["death"]) for b in bars} == {(0, 0, None)} and len(bars) == 4


def test_barcode_zero_distance(tmp_path, capsys):
    (tmp_path / "z.txt").write_text("0\n")
    assert run(capsys, "barcode", tmp_path / "z.txt")[0] == 3


def test_barcode_resource_cap(capsys):
    assert run(capsys, "barcode", GOLDEN / "four_cycle.txt", "--max-simplices", 3)[0] == 4


def test_pathwise_golden(capsys):
    code, out = run(capsys, "pathwise", "--edges", EDGES, "--path", PATH, "--max-dim", 2, "--reps")
    assert code == 0 and out == (GOLDEN / "bifiltered_four_cycle.pathwise.json").read_text()


def test_transform_barcode_roundtrip(tmp_path, capsys):
    d = tmp_path / "d.txt"
    assert run(capsys, "transform", "--edges", EDGES, "--path", PATH, "-o", d)[0] == 0
    _, via_matrix = run(capsys, "barcode", d, "--path", PATH, "--max-dim", 2, "--reps")
    _, direct = run(capsys, "pathwise", "--edges", EDGES, "--path", PATH, "--max-dim", 2, "--reps")
    assert via_matrix == direct


def test_rank(capsys):
    code, out = run(capsys, "rank", "--edges", EDGES, "--v", "1,1", "--w", "1,1")
    assert code == 0 and json.loads(out)["rank"] == 1
    assert run(capsys, "rank", "--edges", EDGES, "--v", "1,2", "--w", "2,1")[0] == 3


def test_rank_sample(tmp_path, capsys):
    (tmp_path / "s.json").write_text("[[1,1],[2,2]]")
    code, out = run(capsys, "rank", "--edges", EDGES, "--sample", tmp_path / "s.json")
    assert code == 0 and [r["rank"] for r in json.loads(out)["ranks"]] == [1, 0, 0]


def test_synth_deterministic(capsys):
    a = run(capsys, "synth", "--seed", 7)[1]
    b = run(capsys, "synth", "--seed", 7)[1]
    assert a == b and a.endswith("\n")


def test_tri_synth_zero_homoplasies(tmp_path, capsys):
    run(capsys, "synth", "--seed", 7, "-o", tmp_path / "s.json")
    code, out = run(capsys, "tri", "--dataset", tmp_path / "s.json")
    assert code == 0 and out == "position,from,to,time_bin,tri\n"


def test_tri_fasta_route(tmp_path, capsys):
    s = tmp_path / "s.json"
    fa, meta, summary = tmp_path / "s.fa", tmp_path / "m.csv", tmp_path / "sum.json"
    run(capsys, "synth", "--seed", 3, "--homoplasies", 2, "-o", s, "--fasta", fa, "--metadata", meta)
    truth = json.loads(s.read_text())["truth"]["mutation"]
    code, out = run(capsys, "tri", "--fasta", fa, "--metadata", meta, "--reference-id", "t0", "--summary", summary)
    assert code == 0
    rows = [line.split(",") for line in out.splitlines()[1:]]
    final = {(int(p), a, b): int(v) for p, a, b, t, v in rows if int(t) == 3}
    assert final[truth["position"], truth["from"], truth["to"]] == 2
    info = json.loads(summary.read_text())
    assert info["n_snv_bars"] == 2 and info["ingest"]["n_records"] > 0


def test_oracle(tmp_path, capsys):
    (tmp_path / "c.json").write_text('{"simplices":[[0],[1],[2],[0,1],[1,2],[0,2]]}')
    code, out = run(capsys, "oracle", tmp_path / "c.json")
    assert code == 0 and json.loads(out)["betti"] == [1, 1]
    (tmp_path / "f.json").write_text('{"filtration":[[[0],[1],[0,1]],[[0],[1],[2],[0,1]]]}')
    code, out = run(capsys, "oracle", tmp_path / "f.json")
    assert json.loads(out)["bars"] == [{"birth": 1, "death": None, "dim": 0}, {"birth": 2, "death": None, "dim": 0}]


def test_threads_flag_same_output(capsys):
    a = run(capsys, "pathwise", "--edges", EDGES, "--path", PATH, "--threads", 1)[1]
    b = run(capsys, "pathwise", "--edges", EDGES, "--path", PATH, "--threads", 4)[1]
    assert a == b
