import json
import subprocess
import sys

import pytest

from lwe_groebner.algebra import PrimeField, parse_polynomial, system_from_json
from lwe_groebner.cli import main
from lwe_groebner.groebner import degree_of_regularity


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def gen(tmp_path, capsys, name="inst.json", *extra):
    path = tmp_path / name
    code, _, err = run(capsys, "gen", *extra, "--out", str(path))
    assert code == 0, err
    return path


def test_gen_is_deterministic(tmp_path, capsys):
    args = ("--q", "11", "--n", "3", "--m", "8", "--error-set", "-1,0,1", "--seed", "7")
    first = gen(tmp_path, capsys, "inst.json", *args).read_bytes()
    second = gen(tmp_path, capsys, "inst.json", *args).read_bytes()
    assert first == second
    data = json.loads(first)
    assert data["meta"]["seed"] == 7 and "version" in data["meta"]
    assert set(data["errors"]) <= {0, 1, 10}


def test_gen_rejects_composite(capsys):
    code, _, err = run(capsys, "gen", "--q", "4", "--n", "2", "--m", "3")
    assert code == 2
    assert "not prime" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["gen", "--q", "11"])
    assert info.value.code == 2


def test_solve_recovers_secret(tmp_path, capsys):
    path = gen(tmp_path, capsys, "inst.json", "--q", "11", "--n", "2", "--m", "6", "--error-set", "-1,0,1",
               "--seed", "3", "--resample-until-full-rank")
    code, out, err = run(capsys, "solve", "--in", str(path))
    assert code == 0, err
    rep = json.loads(out)
    assert rep["status"] == "ok"
    assert rep["secret_recovered"]
    assert rep["solving_degree"] <= (2 + 1) * (3 - 1) + 1
    assert rep["solving_degree"] <= rep["macaulay_bound"]
    assert rep["refined_solving_degree"] <= rep["solving_degree"]
    assert rep["generic_coordinates"] == "InGenericCoordinates"
    for key in ("d_reg", "basis_size", "solutions", "s_poly_max_degree"):
        assert key in rep
    if isinstance(rep["d_reg"], int) and rep["s_poly_max_degree"] is not None:
        assert rep["s_poly_max_degree"] <= 2 * rep["d_reg"] - 2


def test_noiseless_solves_at_degree_one(tmp_path, capsys):
    path = gen(tmp_path, capsys, "inst.json", "--q", "13", "--n", "3", "--m", "5", "--sigma", "0",
               "--resample-until-full-rank")
    code, out, _ = run(capsys, "solve", "--in", str(path))
    rep = json.loads(out)
    assert code == 0 and rep["solving_degree"] == 1 and rep["secret_recovered"]


def test_rank_deficient_status(tmp_path, capsys):
    inst = {"q": 7, "n": 2, "m": 2, "A": [[1, 2], [2, 4]], "b": [0, 0], "seed": 0,
            "error_model": {"kind": "set", "values": [0]}, "secret_model": {"kind": "uniform"}}
    path = tmp_path / "deficient.json"
    path.write_text(json.dumps(inst))
    code, out, _ = run(capsys, "solve", "--in", str(path))
    assert code == 0
    assert json.loads(out)["status"] == "RankDeficient"


def test_cap_exceeded_exit_code(tmp_path, capsys):
    path = gen(tmp_path, capsys, "inst.json", "--q", "11", "--n", "2", "--m", "3", "--error-set", "-1,0,1",
               "--resample-until-full-rank")
    code, out, _ = run(capsys, "solve", "--in", str(path), "--cap-degree", "3")
    assert code == 4
    rep = json.loads(out)
    assert rep["status"] == "CapExceeded" and rep["profile"]["cap"] == 3


def test_build_and_dreg(tmp_path, capsys):
    inst = gen(tmp_path, capsys, "inst.json", "--q", "7", "--n", "2", "--m", "4", "--error-set", "0,1")
    sys_path = tmp_path / "sys.json"
    code, _, _ = run(capsys, "build", "--in", str(inst), "--out", str(sys_path))
    assert code == 0
    code, out, _ = run(capsys, "dreg", "--in", str(sys_path))
    prof = json.loads(out)
    F = system_from_json(json.loads(sys_path.read_text()))
    expected = degree_of_regularity(F, prof["cap"]).d_reg
    assert code == 0 and prof["d_reg"] == expected


def test_estimate_json_and_table(capsys):
    code, out, _ = run(capsys, "estimate", "--n", "768", "--m", "768^4", "--D", "5",
                       "--variant", "small_secret_small_error")
    rep = json.loads(out)
    assert code == 0 and rep["d_reg_lowest"] == 7
    assert rep["meta"]["config"]["omega"] == 2.0
    code, out, _ = run(capsys, "estimate", "--n", "768", "--m", "768^4", "--D", "5", "--format", "table")
    assert code == 0 and "d_reg_lowest" in out


def test_hints_apply(tmp_path, capsys):
    system = {"q": 13, "n": 2, "polys": [[[1, [2, 0]], [12, [1, 1]]]]}
    sp = tmp_path / "s.json"
    sp.write_text(json.dumps(system))
    hp = tmp_path / "h.json"
    hp.write_text('[{"kind":"perfect","v":[1,0],"l":3}]')
    code, out, err = run(capsys, "hints", "apply", "--in", str(sp), "--hints", str(hp))
    assert code == 0, err
    data = json.loads(out)
    out_sys = system_from_json(data)
    assert data["n"] == 1
    assert out_sys == [parse_polynomial("9+10*x1", PrimeField(13), 1)]


def test_dist(capsys):
    code, out, _ = run(capsys, "dist", "--q", "3", "--n", "2", "--d", "2")
    rep = json.loads(out)
    assert code == 0 and rep["image_size"] == 5 and rep["exact_tv"] == "22/27"


@pytest.mark.parametrize("target", ["kyber768", "hints-table", "binary-error-examples"])
def test_reproduce_targets(target, capsys):
    code, out, _ = run(capsys, "reproduce", target)
    data = json.loads(out)
    assert code == (3 if data["failed"] else 0)
    assert all(c["within_tolerance"] or c["known_discrepancy"] for c in data["cells"])
    assert code == 0


def test_reproduce_values(capsys):
    _, out, _ = run(capsys, "reproduce", "hints-table")
    cells = {c["cell"]: c for c in json.loads(out)["cells"]}
    hit = [c for k, c in cells.items() if "190" in k and "binary_error" in k]
    assert {c["reference"] for c in hit} >= {0, 80, 45}
    assert all(c["within_tolerance"] for c in hit)


@pytest.mark.parametrize("argv", [
    ("estimate", "--n", "64", "--m", "n^2", "--D", "3", "--sigma", "1", "--t", "3"),
    ("dist", "--q", "5", "--n", "2", "--d", "3"),
    ("reproduce", "binary-error-examples"),
    ("gen", "--q", "13", "--n", "2", "--m", "3"),
])
def test_json_round_trip(argv, capsys):
    _, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert json.loads(json.dumps(data, sort_keys=True)) == data


def test_console_module_runs():
    proc = subprocess.run([sys.executable, "-m", "lwe_groebner.cli", "dist", "--q", "3", "--n", "1", "--d", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["image_size"] == 2
