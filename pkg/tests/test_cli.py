import io
import json

import pytest

from qcayley import symp
from qcayley.cli import SWEEP_COLUMNS, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_info_15():
    code, text = run("info", "15")
    assert code == 0
    assert "diameter of G_15: 3" in text
    assert "perfect: no" in text and "qcayley hole 15" in text


def test_sweep_rows_and_columns():
    code, text = run("sweep", "--max", "100")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == ",".join(SWEEP_COLUMNS)
    assert len(lines) == 100  # header + n = 2..100
    row = dict(zip(SWEEP_COLUMNS, lines[23].split(",")))
    assert row["n"] == "24" and row["diam_formula"] == row["diam_bfs"] == "12"
    assert row["udiam"] == "none"


def test_sweep_is_deterministic():
    assert run("sweep", "--max", "60") == run("sweep", "--max", "60")


def test_counts_csv():
    code, text = run("counts", "15")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "n,r,s_formula,d_formula,s_oracle,d_oracle"
    assert len(lines) == 16
    for line in lines[1:]:
        _, _, sf, df, so, do = line.split(",")
        assert (sf, df) == (so, do)


def test_counts_even_is_usage_error():
    assert run("counts", "10")[0] == 2


def test_hole_verify():
    code, text = run("hole", "21", "--verify")
    assert code == 0 and "two-primes-case-b" in text and "verified" in text
    code, text = run("hole", "9")
    assert code == 0 and "perfect" in text


def test_walk():
    assert run("walk", "7", "3") == (0, "3 = -4  (mod 7)\n")
    code, text = run("walk", "5", "2", "--signs", "++")
    assert text == "2 = +1 +1  (mod 5)\n"
    assert run("walk", "9", "1", "--signs", "++")[0] == 1
    assert run("walk", "9", "1", "--signs", "+x")[0] == 2
    code, text = run("walk", "12", "5", "--units")
    assert code == 0 and text.startswith("5 = ")


def test_export_dot():
    code, text = run("export-dot", "5")
    assert code == 0 and text.startswith("graph G_5 {")
    code, text = run("export-dot", "5", "--directed")
    assert text.startswith("digraph Gamma_5 {")
    assert run("export-dot", "500")[0] == 2


def test_symplectic_round_trip(tmp_path):
    s_path, p_path = tmp_path / "S.json", tmp_path / "P.ops"
    code, _ = run("symplectic", "random", "--m", "2", "--n", "13", "--count", "30",
                  "--seed", "4", "--out", str(s_path))
    assert code == 0
    data = json.loads(s_path.read_text())
    assert data["n"] == 13 and data["m"] == 2
    code, _ = run("symplectic", "decompose", "--in", str(s_path), "--out", str(p_path), "--verify")
    assert code == 0
    code, text = run("symplectic", "verify", "--in", str(s_path), "--ops", str(p_path))
    assert code == 0 and text.startswith("ok")
    p_path.write_text("C 1 2 +1\n")
    assert run("symplectic", "verify", "--in", str(s_path), "--ops", str(p_path))[0] == 1


def test_symplectic_identity_is_empty(tmp_path):
    path = tmp_path / "I.json"
    path.write_text(symp.dump_matrix(symp.identity(4, 5), 5))
    code, text = run("symplectic", "decompose", "--in", str(path))
    assert code == 0 and text == "# m=2 n=5 ops=0\n"


def test_symplectic_rejects_bad_input(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 5, "m": 1, "rows": [[2, 0], [0, 2]]}')
    assert run("symplectic", "decompose", "--in", str(path))[0] == 2
    assert run("symplectic", "decompose", "--in", str(tmp_path / "missing.json"))[0] == 2


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["info", "zero"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
