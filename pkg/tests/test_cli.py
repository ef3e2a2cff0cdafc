from __future__ import annotations

import json
import subprocess
import sys

from rootneg.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_known_system(capsys):
    code, out, _ = invoke(capsys, "build", "--type", "BC1")
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "BC1"
    assert doc["positive_roots"] == [[1], [2]]
    assert doc["weyl_order"] == "2"
    assert doc["gram"] == [["1"]]
    assert doc["dual_type"] == "BC1"


def test_build_rejects_unknown_family(capsys):
    code, out, err = invoke(capsys, "build", "--type", "Z9")
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_unknown_command_and_flag():
    assert run(["frobnicate"]) == 2
    assert run(["build", "--type", "A2", "--sideways"]) == 2
    assert run([]) == 2


def test_nsigma_type_a(tmp_path, capsys):
    code, out, _ = invoke(
        capsys, "nsigma", "--type", "A3", "--cache-dir", str(tmp_path)
    )
    assert code == 0
    assert out.strip() == (
        '{"type":"A3","n_sigma":"1","subsystems":[{"label":"A3","n":"1"}]}'
    )


def test_nsigma_cache_is_idempotent(tmp_path, capsys):
    first = invoke(capsys, "nsigma", "--type", "B2", "--cache-dir", str(tmp_path))
    cache_file = tmp_path / "nsigma.json"
    assert cache_file.exists()
    stamp = cache_file.read_text()
    second = invoke(capsys, "nsigma", "--type", "B2", "--cache-dir", str(tmp_path))
    assert first == second
    assert cache_file.read_text() == stamp
    doc = json.loads(first[1])
    assert doc["n_sigma"] == "2"
    assert sorted(s["n"] for s in doc["subsystems"]) == ["1", "1", "2"]


def test_subsystems_b2(capsys):
    code, out, _ = invoke(capsys, "subsystems", "--type", "B2")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 3
    labels = [(s["label"], s["n"]) for s in doc["subsystems"]]
    assert labels == [("A1xA1", "1"), ("A1xA1", "2"), ("B2", "1")]
    assert doc["subsystems"][1]["divisors"] == ["1", "2"]


def test_subsystems_brute_force_rank_guard(capsys):
    code, _, err = invoke(
        capsys, "subsystems", "--type", "D4", "--method", "brute_force"
    )
    assert code == 2 and "rank" in err


def test_class_output_shape(capsys):
    code, out, _ = invoke(capsys, "class", "--type", "A2", "--re", "1/2,1/2")
    assert code == 0
    doc = json.loads(out)
    assert doc["re"] == ["1/2", "1/2"] and doc["im"] == ["0", "0"]
    assert doc["gallery_size"] == 3 and doc["chamber_count"] == 3
    assert doc["edge_dim"] == 1 and doc["edge_basis"] == [["-1", "1"]]
    words = sorted(tuple(m["word"]) for m in doc["members"])
    assert words == [(), (1,), (2,)]


def test_negative_coordinate_values_parse(capsys):
    # argparse needs help with values that begin with a dash
    code, out, _ = invoke(
        capsys,
        "negativity", "--type", "A2", "--re", "-1,-1", "--im", "0,0",
        "--mode", "strict",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["feasible"] is True and doc["class_ok"] is True
    assert doc["witness"] == ["0", "0"]
    assert doc["span_basis"] == [[0, 1], [1, 0]]


def test_negativity_strict_rejects_subspace(capsys):
    code, _, err = invoke(
        capsys,
        "negativity", "--type", "A2", "--re", "-1,-1", "--mode", "strict",
        "--subspace", "1,0;0,1",
    )
    assert code == 2 and "strict" in err


def test_coordinate_count_mismatch(capsys):
    code, _, err = invoke(capsys, "class", "--type", "A2", "--re", "1/2")
    assert code == 2 and "coordinate" in err


def test_fundamental_report(capsys):
    code, out, _ = invoke(
        capsys, "fundamental", "--type", "A2", "--re", "-1,-1", "--mode", "strict"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["n_lattice"] == "3"
    assert doc["edge_trivial"] is True and doc["integrality_ok"] is True
    assert doc["parabolic_type"] == "A2"
    assert doc["containing_member_word"] == []


def test_exponent_certificate(capsys):
    code, out, _ = invoke(
        capsys,
        "exponent", "--spherical", "1,0;0,1", "--mu", "1/3,1/2",
        "--rhoq", "0,0", "--nu", "0,0", "--n", "6",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["solvable"] and doc["lattice_ok"] and doc["ds1_ok"] and doc["ds2_ok"]
    assert doc["coefficients"] == ["1/3", "1/2"]


def test_exponent_dimension_error(capsys):
    code, _, err = invoke(
        capsys,
        "exponent", "--spherical", "1,0", "--mu", "1", "--rhoq", "0", "--nu", "0",
    )
    assert code == 2 and "error:" in err


def test_rank_one_bound(capsys):
    assert invoke(capsys, "rank-one-bound", "--type", "A2")[1].strip() == (
        '{"bound":"162"}'
    )
    assert invoke(capsys, "rank-one-bound")[1].strip() == '{"bound":"18"}'


def test_snf_example(capsys):
    code, out, _ = invoke(capsys, "snf", "--matrix", "2,1;0,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["divisors"] == ["1", "4"]
    u, d, v = doc["u"], doc["d"], doc["v"]
    a = [[2, 1], [0, 2]]
    prod = [
        [
            sum(u[i][k] * a[k][j] for k in range(2))
            for j in range(2)
        ]
        for i in range(2)
    ]
    prod = [
        [
            sum(prod[i][k] * v[k][j] for k in range(2))
            for j in range(2)
        ]
        for i in range(2)
    ]
    assert prod == d


def test_snf_ragged_matrix(capsys):
    code, _, err = invoke(capsys, "snf", "--matrix", "2,1;0")
    assert code == 2 and "error:" in err


def test_capacity_guard_names_limit(capsys):
    code, _, err = invoke(capsys, "gallery", "--type", "E8", "--re", "0,0,0,0,0,0,0,0")
    assert code == 2 and "1000000" in err


def test_pretty_only_changes_whitespace(capsys):
    plain = invoke(capsys, "edge", "--type", "A2", "--re", "1/2,1/2")
    pretty = invoke(
        capsys, "edge", "--type", "A2", "--re", "1/2,1/2", "--pretty"
    )
    assert plain[0] == pretty[0] == 0
    assert json.loads(plain[1]) == json.loads(pretty[1])
    assert "\n  " in pretty[1] and "\n  " not in plain[1]


def test_no_float_literals_in_output(capsys):
    for argv in (
        ("build", "--type", "G2"),
        ("class", "--type", "B2", "--re", "1/2,1"),
        ("negativity", "--type", "B2", "--re", "-1,-1", "--mode", "weak"),
    ):
        _, out, _ = invoke(capsys, *argv)
        for token in json.loads(out).values():
            assert not isinstance(token, float)
        assert "." not in out


def test_cli_byte_determinism_subprocess():
    argv = [
        sys.executable, "-m", "rootneg.cli",
        "class", "--type", "G2", "--re", "1/5,1/7",
    ]
    first = subprocess.run(argv, capture_output=True, check=True)
    second = subprocess.run(argv, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.endswith(b"\n")


def test_console_entry_point():
    result = subprocess.run(
        ["rootneg", "rank-one-bound", "--type", "B2"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert result.stdout.strip() == '{"bound":"72"}'
