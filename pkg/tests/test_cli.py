import json
import io
import contextlib

import pytest

from nichols_fusion.cli import main


def run_cli(args, cache=None):
    buf = io.StringIO()
    argv = list(args)
    if cache is not None:
        argv += ["--cache-dir", str(cache)]
    else:
        argv += ["--no-cache"]
    with contextlib.redirect_stdout(buf):
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse error path
            code = exc.code
    return code, buf.getvalue()


def test_usage_errors_exit_1():
    code, _ = run_cli(["fusion", "--p", "1"])
    assert code == 1
    code, _ = run_cli(["fusion", "--p", "13"])
    assert code == 1
    code, _ = run_cli(["classify", "--p", "3", "--a", "1"])
    assert code == 1
    code, _ = run_cli(["classify", "--p", "3", "--a", "1", "--b", "0", "--t", "5"])
    assert code == 1


def test_p_cap_is_configurable():
    code, _ = run_cli(["decompose", "--p", "13", "--max-p", "13", "--vertices", "1"])
    assert code == 0


def test_fusion_json_contains_spec_row():
    code, out = run_cli(["fusion", "--p", "2", "--format", "json", "--nu-mod", "4"])
    assert code == 0
    data = json.loads(out)
    rows = [
        r
        for r in data["table"]
        if (r["r1"], r["nu1"], r["r2"], r["nu2"]) == (2, 0, 2, 0)
    ]
    assert rows[0]["summands"] == [{"kind": "P", "nu": 0, "r": 1}]


def test_fusion_nu_mod_2_table_shape():
    code, out = run_cli(["fusion", "--p", "3", "--nu-mod", "2"])
    assert code == 0
    data = json.loads(out)
    assert len(data["table"]) == 6 * 6  # 2p simples on each side


def test_classify_cell():
    code, out = run_cli(["classify", "--p", "5", "--a", "0", "--b", "0", "--t", "2"])
    assert code == 0
    data = json.loads(out)
    assert (data["kind"], data["r"], data["nu"]) == ("L", 2, 1)


def test_decompose_multiplicities():
    code, out = run_cli(["decompose", "--p", "5", "--vertices", "2"])
    assert code == 0
    data = json.loads(out)
    by_key = {(s["kind"], s["r"]): s["mult"] for s in data["summands"]}
    assert by_key[("S", 5)] == 25
    assert [by_key[("V", r)] for r in (1, 2, 3, 4)] == [8, 12, 12, 8]
    assert [by_key[("P", r)] for r in (1, 2, 3, 4)] == [16, 9, 4, 1]
    assert data["dimension"] == 625


def test_loop_scalars_round_trip():
    code, out = run_cli(["loop", "--p", "2", "--nu-mod", "2"])
    assert code == 0
    data = json.loads(out)
    row = [r for r in data["table"] if (r["rp"], r["nup"], r["r"], r["nu"]) == (1, 0, 1, 0)][0]
    assert row["lambda"]["zeta_coeffs"][0] == 1  # the unit eigenvalue
    assert json.loads(json.dumps(data)) == data


def test_verify_passes_and_prints_lines():
    code, out = run_cli(["verify", "--p", "2", "--suite", "hopf"])
    assert code == 0
    assert "PASS hopf.bialgebra" in out
    assert "checks passed" in out


def test_verify_deterministic_and_cached(tmp_path):
    code1, out1 = run_cli(["verify", "--p", "2", "--suite", "ring"], cache=tmp_path)
    code2, out2 = run_cli(["verify", "--p", "2", "--suite", "ring"], cache=tmp_path)
    assert code1 == code2 == 0
    assert out1 == out2
    cached = list(tmp_path.glob("*.json"))
    assert len(cached) == 1
    stored = json.loads(cached[0].read_text())
    assert stored["schema"].startswith("nichols-fusion/")


def test_csv_format():
    code, out = run_cli(["decompose", "--p", "3", "--vertices", "1", "--format", "csv"])
    assert code == 0
    header = out.splitlines()[0]
    assert set(header.split(",")) == {"kind", "r", "mult"}


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    code, out = run_cli(
        ["classify", "--p", "3", "--a", "0", "--b", "0", "--t", "0", "--out", str(target)]
    )
    assert code == 0
    assert target.read_text() == out
