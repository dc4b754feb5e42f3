import json

import pytest

from dhurwitz.cli import RunConfig, main
from dhurwitz.errors import PreconditionError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_examples(capsys):
    code, out, err = run(capsys, "compute", "--genus", "0", "--alpha", "3", "--beta", "1,1,1")
    assert (code, out.strip()) == (0, "6")
    assert "cross-checked" in err
    code, out, _ = run(capsys, "compute", "--genus", "1", "--alpha", "2", "--beta", "2")
    assert (code, out.strip()) == (0, "1/2")


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, "--format", "json", "compute", "--genus", "1", "--alpha", "2", "--beta", "2")
    assert code == 0
    record = json.loads(out)
    assert record == {"genus": 1, "alpha": [2], "beta": [2], "r": 2, "value": "1/2", "method": "one-part"}


def test_compute_per_command_format_and_csv(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["genus,alpha,beta,r,value,method", '0,"2,1","2,1",2,4/1,genus0']


@pytest.mark.parametrize("method", ["brute", "character", "closed"])
def test_compute_methods(capsys, method):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--alpha", "3", "--beta", "1,1,1", "--method", method)
    assert (code, out.strip()) == (0, "6")


def test_compute_aut_divided(capsys):
    code, out, _ = run(capsys, "compute", "--genus", "0", "--alpha", "1,1", "--beta", "1,1", "--aut-divided")
    assert (code, out.strip()) == (0, "1/2")


def test_size_mismatch_is_a_precondition_error(capsys):
    code, out, err = run(capsys, "compute", "--genus", "0", "--alpha", "2", "--beta", "1,1,1")
    assert code == 2 and out == ""
    payload = json.loads(err.strip().splitlines()[-1])
    assert payload["error"] == "PreconditionError" and payload["exit_code"] == 2


def test_closed_method_without_formula(capsys):
    code, _, err = run(capsys, "compute", "--genus", "1", "--alpha", "2,2", "--beta", "2,2", "--method", "closed")
    assert code == 2
    assert json.loads(err.strip())["exit_code"] == 2


def test_resource_limit_exit_code(capsys):
    argv = ["compute", "--genus", "3", "--alpha", "3,2", "--beta", "4,1", "--method", "brute", "--work-limit", "50"]
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert json.loads(err.strip())["error"] == "ResourceLimitError"


def test_bad_arguments_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["compute", "--genus", "0", "--alpha", "a", "--beta", "1"])
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert json.loads(err.strip().splitlines()[-1])["error"] == "UsageError"
    with pytest.raises(SystemExit):
        main(["compute", "--genus", "0", "--alpha", "1", "--beta", "1", "--method", "magic"])


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "one-part", "--dmax", "8", "--gmax", "3")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "join-cut", "--dmax", "4")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--suite", "all", "--dmax", "2")
    assert code == 0 and "FAIL" not in out


def test_verify_as_printed_fails_with_both_sides(capsys):
    code, out, err = run(capsys, "--format", "json", "verify", "--suite", "ansatz", "--as-printed")
    assert code == 4
    payload = json.loads(out)
    assert not payload["passed"] and payload["failures"]
    assert {"label", "left", "right"} <= set(payload["failures"][0])
    assert err


def test_symbol_example(capsys):
    code, out, _ = run(capsys, "symbol", "--genus", "1", "--k", "0", "--b", "2")
    assert (code, out.strip()) == (0, "1/24, 1/24")
    code, out, _ = run(capsys, "symbol", "--genus", "1", "--k", "1", "--b", "0", "--format", "json")
    assert json.loads(out)["explicit_sum"] == "1/24"


def test_symbol_undefined_index(capsys):
    code, _, _ = run(capsys, "symbol", "--genus", "0", "--b", "0")
    assert code == 2


def test_ray_example(capsys):
    code, out, _ = run(capsys, "ray", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--t-max", "6")
    assert code == 0
    assert "degree 1, leading 4" in out
    code, out, _ = run(capsys, "ray", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--t-max", "6", "--format", "json")
    row = json.loads(out)
    assert row["degree"] == 1 and row["leading"] == "4/1" and len(row["values"]) == 6


def test_ray_too_few_samples(capsys):
    code, _, err = run(capsys, "ray", "--genus", "0", "--alpha", "2,1", "--beta", "2,1", "--t-max", "2")
    assert code == 2
    assert json.loads(err.strip())["error"] == "InconclusiveFitError"


def test_table_example(capsys, tmp_path):
    target = tmp_path / "t.json"
    code, _, err = run(capsys, "table", "--dmax", "3", "--rmax", "4", "--out", str(target))
    assert code == 0 and "wrote" in err
    payload = json.loads(target.read_text())
    keys = {(tuple(e["alpha"]), tuple(e["beta"]), e["r"]) for e in payload["entries"]}
    partitions = {1: [(1,)], 2: [(2,), (1, 1)], 3: [(3,), (2, 1), (1, 1, 1)]}
    expected = {(a, b, r) for ps in partitions.values() for a in ps for b in ps for r in range(5)}
    assert keys == expected


def test_cache_directory_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("DHURWITZ_CACHE_DIR", str(tmp_path))
    code, out, _ = run(capsys, "compute", "--genus", "1", "--alpha", "2,2,1", "--beta", "3,2", "--method", "character")
    assert code == 0
    assert list(tmp_path.glob("characters_d*.json"))
    again, out2, _ = run(capsys, "compute", "--genus", "1", "--alpha", "2,2,1", "--beta", "3,2", "--method", "character")
    assert again == 0 and out2 == out


def test_run_config_validation():
    with pytest.raises(PreconditionError):
        RunConfig(d_max=0)
    with pytest.raises(PreconditionError):
        RunConfig(r_max=-1)
    assert RunConfig(r_max=0).r_max == 0
