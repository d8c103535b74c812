import json

import pytest

from main import EXIT_CAPACITY, EXIT_DOMAIN, EXIT_OK, dispatch
from src.omega import REFERENCE_VALUES


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ["PERMCODE_CACHE", "PERMCODE_WORKERS", "PERMCODE_BUDGET", "PERMCODE_LOG_LEVEL"]:
        monkeypatch.delenv(key, raising=False)


def run(capsys, *argv):
    code = dispatch(list(argv))
    return code, capsys.readouterr().out


def test_omega_value(capsys):
    assert run(capsys, "omega", "--d", "2", "--x", "2") == (EXIT_OK, "18\n")


def test_omega_reference_values(capsys):
    for d, expected in enumerate(REFERENCE_VALUES, start=1):
        assert run(capsys, "omega", "--d", str(d), "--x", "2") == (EXIT_OK, f"{expected}\n")


def test_omega_defaults_to_two(capsys):
    assert run(capsys, "omega", "--d", "3") == (EXIT_OK, "170\n")


def test_omega_poly(capsys):
    code, out = run(capsys, "omega", "--d", "2", "--poly")
    assert code == EXIT_OK
    assert json.loads(out) == [2, 6, 1]
    code, out = run(capsys, "omega", "--d", "2", "--poly", "--shifted")
    assert json.loads(out) == [9, 8, 1]


def test_omega_rational(capsys):
    assert run(capsys, "omega", "--d", "2", "--x", "5/2") == (EXIT_OK, "93/4\n")


def test_volume(capsys):
    assert run(capsys, "volume", "--d", "1", "--n", "5") == (EXIT_OK, "V(1,5) = 8\n")


def test_volume_all_engines(capsys):
    code, out = run(capsys, "volume", "--d", "2", "--n", "6", "--all-engines")
    assert code == EXIT_OK
    assert out.splitlines() == ["V(2,6) = 73"] * 3


def test_volume_json(capsys):
    code, out = run(capsys, "--format", "json", "volume", "--d", "1", "--n", "30")
    assert code == EXIT_OK
    assert json.loads(out) == {"d": 1, "n": 30, "volume": "1346269", "engine": "dp", "error": None}


def fibonacci(k):
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def test_volume_with_thousands_of_digits(capsys):
    expected = str(fibonacci(25001))
    assert len(expected) > 5000
    assert run(capsys, "volume", "--d", "1", "--n", "25000") == (EXIT_OK, f"V(1,25000) = {expected}\n")
    code, out = run(capsys, "--format", "json", "volume", "--d", "1", "--n", "25000")
    assert code == EXIT_OK
    assert json.loads(out)["volume"] == expected


def test_format_flag_after_subcommand(capsys):
    code, out = run(capsys, "volume", "--d", "1", "--n", "5", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["d,n,volume,engine", "1,5,8,dp"]


def test_volume_cache(capsys, tmp_path):
    cache = tmp_path / "volumes.csv"
    assert run(capsys, "--cache", str(cache), "volume", "--d", "2", "--n", "8")[0] == EXIT_OK
    code, out = run(capsys, "--format", "json", "--cache", str(cache), "volume", "--d", "2", "--n", "8")
    assert json.loads(out)["engine"] == "cache"
    assert json.loads(out)["volume"] == "400"


def test_verify_conjecture(capsys):
    code, out = run(capsys, "verify", "conjecture", "--max-d", "3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 3
    assert all(line.startswith(f"theorem(d={d})") and "holds" in line for d, line in enumerate(lines, start=1))


def test_verify_json(capsys):
    code, out = run(capsys, "--format", "json", "verify", "lemma", "--max-m", "2", "--max-n", "3")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert len(payload) == 6
    assert all(item["holds"] for item in payload)


@pytest.mark.parametrize("kind", ["telescoping", "bm", "chain", "values"])
def test_verify_other_families(capsys, kind):
    assert run(capsys, "verify", kind)[0] == EXIT_OK


def test_verify_capacity(capsys):
    code, _ = run(capsys, "--budget", "5", "verify", "lemma", "--max-m", "3", "--max-n", "4")
    assert code == EXIT_CAPACITY


def test_bounds(capsys):
    code, out = run(capsys, "--format", "csv", "bounds", "--d", "1", "--n", "5")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "d,n,ln_old,ln_new,ln_omega_d,ln_exact"


def test_bounds_exact(capsys):
    code, out = run(capsys, "--format", "json", "bounds", "--d", "1", "--n", "5", "--exact")
    payload = json.loads(out)
    assert payload["gv_floor"] == "15"
    assert payload["packing_ceiling"] == "15"


def test_crossover(capsys):
    code, out = run(capsys, "crossover", "--d", "3", "--n-max", "50")
    assert (code, out) == (EXIT_OK, "d=3: the omega bound beats the plain bound for 1 <= n <= 4\n")


def test_crossover_sweep(capsys):
    code, out = run(capsys, "--format", "json", "crossover", "--sweep", "--max-d", "20")
    assert code == EXIT_OK
    assert [item["d"] for item in json.loads(out)] == list(range(1, 21))


def test_crossover_needs_d(capsys):
    assert run(capsys, "crossover")[0] == EXIT_DOMAIN


def test_codebounds(capsys):
    code, out = run(capsys, "--format", "csv", "codebounds", "--n", "5", "--dist", "3")
    assert out.splitlines() == ["n,dist,gv_floor,packing_ceiling", "5,3,4,15"]


def test_code_search_words(capsys):
    code, out = run(capsys, "code-search", "--n", "3", "--dist", "2", "--words")
    assert code == EXIT_OK
    assert out.splitlines() == ["code n=3 dist=2 (greedy/lex): size 3", "1,2,3", "2,3,1", "3,1,2"]


def test_code_search_json(capsys):
    code, out = run(capsys, "--format", "json", "code-search", "--n", "4", "--dist", "3", "--method", "exact", "--words")
    payload = json.loads(out)
    assert {"n", "dist", "size", "words"} <= set(payload)
    assert payload["size"] == len(payload["words"])


def test_matrix_grid(capsys):
    code, out = run(capsys, "matrix", "--family", "klove", "--d", "1", "--n", "3", "--permanent")
    assert code == EXIT_OK
    assert out.splitlines() == ["2 1 0", "1 1 1", "0 1 2", "per = 8  [dp]"]


def test_matrix_json(capsys):
    code, out = run(capsys, "--format", "json", "matrix", "--family", "omega", "--d", "2", "--x", "2", "--permanent")
    payload = json.loads(out)
    assert payload["entries"] == [[2, 2, 1, 0], [2, 1, 1, 1]]
    assert payload["permanent"] == "18"


@pytest.mark.parametrize("argv", [
    ["matrix", "--family", "klove", "--d", "2", "--n", "4"],
    ["matrix", "--family", "band", "--d", "1"],
    ["codebounds", "--n", "3", "--dist", "5"],
    ["omega", "--d", "0"],
    ["code-search", "--n", "3", "--dist", "2", "--order", "lex", "--method", "greedy", "--budget", "0"],
])
def test_domain_errors_exit_one(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_DOMAIN


@pytest.mark.parametrize("argv", [["frobnicate"], ["volume", "--d", "1"], ["volume", "--d", "x", "--n", "3"], []])
def test_usage_errors_exit_one(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_DOMAIN


def test_capacity_error_exits_two(capsys):
    assert run(capsys, "volume", "--d", "13", "--n", "40", "--engine", "dp")[0] == EXIT_CAPACITY
    assert run(capsys, "code-search", "--n", "7", "--dist", "3", "--method", "exact")[0] == EXIT_CAPACITY
