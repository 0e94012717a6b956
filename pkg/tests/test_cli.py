"""Exit codes, text formats, and JSON schema of the command line."""
import json
import pathlib

import pytest

from cobweb.cli import main

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fnomial_text(capsys):
    code, out, err = run(capsys, "fnomial", "fib", "5", "2")
    assert (code, out, err) == (0, "15\n", "")


def test_fnomial_non_integer_is_an_answer(capsys):
    code, out, _ = run(capsys, "fnomial", "list:[2,3,4,5]", "2", "1")
    assert code == 0
    assert out == "non-integer: 3/2\n"


def test_fnomial_json(capsys):
    code, out, _ = run(capsys, "fnomial", "fib", "5", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"sequence": "fib", "n": 5, "k": 2, "integer": True, "value": 15}


def test_fnomial_json_non_integer(capsys):
    _, out, _ = run(capsys, "fnomial", "odd", "4", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["integer"] is False
    assert doc["value"] == "35/3"
    assert (doc["numerator"], doc["denominator"]) == (35, 3)


def test_fnomial_domain_error(capsys):
    code, out, err = run(capsys, "fnomial", "fib", "2", "5")
    assert code == 1
    assert out == ""
    assert "error" in err


def test_bad_sequence_is_usage_error(capsys):
    code, _, err = run(capsys, "fnomial", "nope", "2", "1")
    assert code == 2
    assert "nope" in err
    assert "list:[v1,v2,...]" in err  # the expected grammar is spelled out


def test_usage_error_from_argparse(capsys):
    with pytest.raises(SystemExit) as info:
        main(["fnomial", "fib", "5"])  # missing k
    assert info.value.code == 2


def test_admissible_text(capsys):
    code, out, _ = run(capsys, "admissible", "fib", "--max", "20")
    assert (code, out) == (0, "admissible up to 20\n")
    code, out, _ = run(capsys, "admissible", "list:[2,3,4,5]", "--max", "4")
    assert code == 0
    assert out == "not admissible: (2 1)_F = 3/2; admissible up to 1\n"


def test_admissible_json(capsys):
    _, out, _ = run(capsys, "admissible", "odd", "--max", "6", "--format", "json")
    doc = json.loads(out)
    assert doc["admissible"] is False
    assert doc["failure"] == {"n": 4, "k": 2, "quotient": "35/3"}
    assert doc["admissible_up_to"] == 3


def test_gcdmorphic_text(capsys):
    code, out, _ = run(capsys, "gcdmorphic", "fib", "--max", "30")
    assert (code, out) == (0, "gcd-morphic up to 30\n")
    code, out, _ = run(capsys, "gcdmorphic", "list:[2,3,4]", "--max", "3")
    assert code == 0
    assert out.startswith("not gcd-morphic: GCD(F_2, F_1) = 1, expected 2")


def test_zeta_golden_fixture(capsys):
    code, out, _ = run(capsys, "zeta", "fib", "--levels", "6", "--size", "16")
    assert code == 0
    assert out == (FIXTURES / "fib_zeta_16.txt").read_text()


def test_zeta_json(capsys):
    _, out, _ = run(capsys, "zeta", "nat", "--levels", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["order"] == [[1, 0], [1, 1], [1, 2], [2, 2]]
    assert doc["rows"] == [[1, 1, 1, 1], [0, 1, 1, 1], [0, 0, 1, 0], [0, 0, 0, 1]]


def test_mobius_inverts_zeta_via_cli(capsys):
    _, zout, _ = run(capsys, "zeta", "fib", "--levels", "4", "--format", "json")
    _, mout, _ = run(capsys, "mobius", "fib", "--levels", "4", "--format", "json")
    z = json.loads(zout)["rows"]
    m = json.loads(mout)["rows"]
    n = len(z)
    prod = [
        [sum(z[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)
    ]
    assert prod == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def test_chains_count_and_enumerate(capsys):
    code, out, _ = run(capsys, "chains", "gauss:2", "--from", "0", "--to", "4")
    assert (code, out) == (0, "315\n")
    code, out, _ = run(capsys, "chains", "fib", "--from", "3", "--to", "4", "--enumerate")
    assert code == 0
    assert out.splitlines() == [
        "(1,3) (1,4)",
        "(1,3) (2,4)",
        "(1,3) (3,4)",
        "(2,3) (1,4)",
        "(2,3) (2,4)",
        "(2,3) (3,4)",
    ]


def test_chains_enumerate_json(capsys):
    _, out, _ = run(
        capsys, "chains", "nat", "--from", "1", "--to", "2", "--enumerate",
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["count"] == 2
    assert doc["chains"] == [[[1, 1], [1, 2]], [[1, 1], [2, 2]]]


def test_chains_budget_exit_3(capsys):
    code, out, err = run(capsys, "chains", "gauss:2", "--from", "0", "--to", "7", "--enumerate")
    assert code == 3
    assert out == ""
    assert "inconclusive" in err and "78129765" in err


def test_grid_outputs(capsys):
    assert run(capsys, "grid", "1", "2")[:2] == (0, "3\n")
    assert run(capsys, "grid", "1", "2", "--bell")[:2] == (0, "3\n")
    assert run(capsys, "grid", "2", "4", "--maxchains")[:2] == (0, "9\n")
    code, out, _ = run(capsys, "grid", "1", "2", "--whitney")
    assert code == 0
    assert out == "# rank whitney2 whitney1\n0 1 1\n1 1 -1\n2 1 0\n"


def test_grid_json(capsys):
    _, out, _ = run(capsys, "grid", "2", "4", "--whitney", "--format", "json")
    doc = json.loads(out)
    assert doc["size"] == 9
    assert sum(r["whitney_second"] for r in doc["ranks"]) == 9
    assert sum(r["whitney_first"] for r in doc["ranks"]) == 0


def test_grid_domain_error(capsys):
    code, _, err = run(capsys, "grid", "3", "2")
    assert code == 1
    assert "error" in err


def test_diagonal_text(capsys):
    code, out, _ = run(capsys, "diagonal", "nat", "--n", "8")
    assert (code, out) == (0, "1 1 2 3 5 8 13 21 34\n")
    code, out, _ = run(capsys, "diagonal", "fib", "--n", "4", "--triangle")
    assert out.splitlines() == ["1", "1", "1 1", "1 1", "1 2 1"]


def test_diagonal_json(capsys):
    _, out, _ = run(capsys, "diagonal", "nat", "--n", "6", "--format", "json")
    doc = json.loads(out)
    assert doc["bells"] == [1, 1, 2, 3, 5, 8, 13]
    assert "triangle" not in doc


def test_tile_yes_with_witness(capsys):
    code, out, _ = run(capsys, "tile", "nat", "1", "3", "--count", "--witness")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "yes"
    assert lines[1] == "count: 4"
    blocks = [line for line in lines if line.startswith("block: ")]
    covered = sorted(int(c) for line in blocks for c in line.split()[1:])
    assert covered == list(range(6))


def test_tile_no(capsys):
    code, out, _ = run(capsys, "tile", "nat", "1", "3", "--sigma", "identity")
    assert (code, out) == (0, "no\n")


def test_tile_json(capsys):
    _, out, _ = run(
        capsys, "tile", "fib", "1", "4", "--count", "--witness", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["verdict"] == "yes"
    assert doc["universe"] == 6
    assert doc["count"] == {"status": "exact", "value": 4}
    flat = sorted(c for chains in doc["witness"]["blocks"] for c in chains)
    assert flat == list(range(6))


def test_tile_inconclusive_exit_3(capsys):
    code, out, _ = run(capsys, "tile", "fib", "1", "4", "--node-budget", "1")
    assert code == 3
    assert out.splitlines()[0] == "inconclusive"


def test_tile_budget_error_exit_3(capsys):
    code, _, err = run(capsys, "tile", "gauss:2", "0", "9")
    assert code == 3
    assert "inconclusive" in err


def test_tile_node_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("COBWEB_NODE_BUDGET", "1")
    code, out, _ = run(capsys, "tile", "fib", "1", "4")
    assert code == 3
    assert out.splitlines()[0] == "inconclusive"
    monkeypatch.setenv("COBWEB_NODE_BUDGET", "junk")
    code, _, err = run(capsys, "tile", "fib", "1", "4")
    assert code == 2
    assert "COBWEB_NODE_BUDGET" in err


def test_tile_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("COBWEB_NODE_BUDGET", "1")
    code, out, _ = run(capsys, "tile", "fib", "1", "4", "--node-budget", "100000")
    assert code == 0
    assert out == "yes\n"


def test_bell_classic(capsys):
    assert run(capsys, "bell-classic", "5")[:2] == (0, "52\n")
    code, out, _ = run(capsys, "bell-classic", "10", "--dobinski", "1e-9")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "115975"
    assert lines[1].startswith("dobinski: ")
    assert "rel_err" in lines[1]


def test_bell_classic_json(capsys):
    _, out, _ = run(capsys, "bell-classic", "5", "--dobinski", "1e-9", "--format", "json")
    doc = json.loads(out)
    assert doc["bell"] == 52
    assert abs(doc["dobinski"] - 52) / 52 <= 1e-9
    assert doc["rel_err"] <= 1e-9


def test_bell_classic_dobinski_range(capsys):
    code, _, err = run(capsys, "bell-classic", "25", "--dobinski", "1e-9")
    assert code == 1
    assert "error" in err


def test_no_scientific_notation_in_exact_output(capsys):
    _, out, _ = run(capsys, "fnomial", "gauss:3", "20", "10")
    assert "e" not in out
    assert int(out) > 10 ** 40
