import json
from pathlib import Path

import pytest

from vacuum_basis.cli import RunConfig, ConfigError, main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr()


def test_enumerate_golden(capsys):
    code, out = run(capsys, "enumerate", "--ell", "1", "--level", "1", "--max-degree", "3")
    assert code == 0
    assert out.out == (GOLDEN / "enumerate_l1_k1_n3.txt").read_text()
    code, out = run(capsys, "enumerate", "--array", "fs", "--max-degree", "3")
    assert out.out == (GOLDEN / "enumerate_fs_l1_k1_n3.txt").read_text()


def test_enumerate_empty_and_formats(capsys):
    code, out = run(capsys, "enumerate", "--max-degree", "0")
    assert code == 0 and out.out == "# ell=1 level=1 array=full max_degree=0\n"
    code, out = run(capsys, "enumerate", "--max-degree", "2", "--format", "structured")
    data = json.loads(out.out)
    assert data["counts"] == {"1": 3, "2": 4}
    code, out = run(capsys, "enumerate", "--max-degree", "1", "--format", "csv")
    assert out.out.splitlines()[0] == "degree,index,partition" and len(out.out.splitlines()) == 4


def test_determinism(capsys):
    _, a = run(capsys, "verify-theorem", "--ell", "1", "--max-degree", "4", "--format", "structured")
    _, b = run(capsys, "verify-theorem", "--ell", "1", "--max-degree", "4", "--format", "structured")
    assert a.out == b.out


def test_verify_theorem(capsys):
    code, out = run(capsys, "verify-theorem", "--ell", "1", "--level", "1", "--max-degree", "6", "--format", "csv")
    assert code == 0
    rows = out.out.splitlines()
    assert rows[1] == "0,1,0,1,1,1"
    assert rows[-1].split(",")[3:] == ["29", "29", "29"]
    code, out = run(capsys, "verify-theorem", "--ell", "1", "--level", "2", "--max-degree", "4", "--array", "fs")
    assert code == 0 and "verdict: PASS" in out.out


def test_verify_lemmas_and_negative_control(capsys):
    code, out = run(capsys, "verify-lemmas", "--ell", "2", "--max-power", "2")
    assert code == 0
    lines = out.out.splitlines()
    checks = int(lines[-1].split("checks=")[1].split()[0])
    assert len(lines) - 1 == checks
    code, out = run(capsys, "verify-lemmas", "--ell", "2", "--corrupt-bracket")
    assert code == 1 and "FAIL" in out.out


def test_verify_shift_and_soundness(capsys):
    code, out = run(capsys, "verify-shift", "--ell", "1", "--level", "1", "--max-degree", "3")
    assert code == 0
    code, out = run(capsys, "verify-soundness", "--samples", "200", "--seed", "4", "--format", "csv")
    assert code == 0 and out.out.startswith("status,check")


def test_dims_and_dump(capsys):
    code, out = run(capsys, "dims", "--ell", "2", "--max-degree", "2", "--format", "csv")
    assert code == 0 and out.out.splitlines()[2] == "1,,,10,,"
    code, out = run(capsys, "dump-model", "--ell", "1")
    assert out.out == (GOLDEN / "model_rank1.txt").read_text()


def test_exit_codes(capsys, monkeypatch):
    assert main(["enumerate", "--level", "0"]) == 2
    assert main(["enumerate", "--ell", "0"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["verify-theorem", "--cap-slice-dim", "-1"]) == 2
    assert main(["verify-theorem", "--max-degree", "5", "--cap-slice-dim", "40"]) == 3
    monkeypatch.setenv("VACUUM_BASIS_CAP_PARTITIONS", "5")
    assert main(["enumerate", "--max-degree", "4"]) == 3
    capsys.readouterr()


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig("enumerate", max_degree=-1).validate()
    assert RunConfig("enumerate").validate().ell == 1
