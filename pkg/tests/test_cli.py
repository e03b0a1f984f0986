import json
import random

import pytest

from coble.cli import main
from coble.configs import PointConfig, random_config, random_transform


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cache_dir(tmp_path):
    return str(tmp_path / "cache")


def test_roots_counts(capsys, cache_dir):
    assert run(capsys, "roots", "5") == (0, "roots: 20\n", "")
    code, out, _ = run(capsys, "roots", "3", "--type", "3A2", "--cache-dir", cache_dir)
    assert code == 0 and "40" in out


def test_roots_split(capsys, cache_dir):
    code, out, _ = run(capsys, "roots", "2", "--type", "7A1", "--split-s7", "--json", "--cache-dir", cache_dir)
    data = json.loads(out)
    assert code == 0 and data["count"] == 135 and data["s7_split"] == [105, 30]
    assert data["lattice"] == {"d": 2, "n": 7} and len(data["subsystems"][0]) == 14


def test_roots_output_is_identical_with_and_without_cache(capsys, cache_dir):
    args = ("roots", "4", "--type", "2A1+A2", "--json")
    _, cold, _ = run(capsys, *args, "--cache-dir", cache_dir)
    _, warm, _ = run(capsys, *args, "--cache-dir", cache_dir)
    _, none, _ = run(capsys, *args, "--no-cache")
    assert cold == warm == none


@pytest.mark.parametrize("argv", [
    ("roots", "7"), ("roots", "3", "--type", "Z9"), ("roots", "3", "--split-s7"),
    ("roots", "3", "--type", "3A2", "--split-s7", "--no-cache"), ("verify", "nosuch"), ("frobnicate",),
    ("eval", "4"), ("verify", "ab", "--jobs", "0"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("d,degree,count,dim", [(4, 10, 12, 6), (3, 9, 40, 10)])
def test_covariants_export(capsys, tmp_path, d, degree, count, dim):
    out_file = tmp_path / "space.json"
    code, out, _ = run(capsys, "covariants", str(d), "--out", str(out_file), "--no-cache")
    assert code == 0 and out == f"degree: {degree}\ncount: {count}\ndimension: {dim}\n"
    data = json.loads(out_file.read_text())
    assert (data["degree"], data["count"], data["dimension"]) == (degree, count, dim)
    assert len(data["covariants"]) == count and "provenance" in data["covariants"][0]


def write(tmp_path, name, config):
    path = tmp_path / name
    path.write_text(json.dumps(config.to_json()))
    return str(path)


def test_eval_generic_and_collinear(capsys, tmp_path):
    c = random_config(random.Random(2), 5)
    code, out, _ = run(capsys, "eval", "4", write(tmp_path, "c.json", c), "--json")
    data = json.loads(out)
    assert code == 0 and data["generic"] and len(data["vector"]) == 12 and not data["vanishing"]
    bad = PointConfig.rational([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1], [2, 3, 7]])
    code, out, _ = run(capsys, "eval", "4", write(tmp_path, "bad.json", bad), "--json")
    data = json.loads(out)
    assert code == 0 and data["collinear_triples"] == [[1, 2, 3]] and len(data["vanishing"]) == 6


def test_eval_compare(capsys, tmp_path):
    rng = random.Random(4)
    c = random_config(rng, 6)
    a = write(tmp_path, "a.json", c)
    b = write(tmp_path, "b.json", c.transform(random_transform(rng)))
    other = write(tmp_path, "o.json", random_config(rng, 6))
    assert run(capsys, "eval", "3", "--compare", a, b)[:2] == (0, "proportional: True\n")
    assert run(capsys, "eval", "3", "--compare", a, other)[0] == 1


@pytest.mark.parametrize("content", ['{"points": [["1","0","0"]]}', "not json", '{"pts": []}',
                                     '{"points": [["1","0","0"],["2","0","0"],["0","1","0"],'
                                     '["0","0","1"],["1","1","1"]]}'])
def test_eval_rejects_bad_input(capsys, tmp_path, content):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, _, err = run(capsys, "eval", "4", str(path))
    assert code == 2 and "bad.json" in err


def test_eval_missing_file(capsys, tmp_path):
    assert run(capsys, "eval", "4", str(tmp_path / "absent.json"))[0] == 2


def test_fields_export(capsys, tmp_path):
    out_file = tmp_path / "f.json"
    code, out, _ = run(capsys, "fields", "d5", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert code == 0 and set(data["fields"]) == {"X2", "X3"} and len(data["fields"]["X2"]) == 5
    from coble.fields import PolyVectorField
    from coble.cuspidal import d5_fields
    assert PolyVectorField.from_json(data["fields"]["X3"]) == d5_fields()[1]


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "ab", "--json")
    second = run(capsys, "verify", "ab", "--json")
    assert first == second and first[0] == 0
    data = json.loads(first[1])
    assert data["passed"] and "seconds" not in data["suites"][0]


def test_verify_reports_expected_failures(capsys):
    code, out, _ = run(capsys, "verify", "degree5")
    assert code == 0 and "xfail worked_product_printed" in out


def test_verify_exit_code_on_failure(capsys, monkeypatch):
    from coble import suites

    def broken(report, seed):
        report.check("always", False)
    monkeypatch.setitem(suites.SUITES, "ab", broken)
    assert run(capsys, "verify", "ab")[0] == 1


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "coble", "roots", "4"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "roots: 40\n"
