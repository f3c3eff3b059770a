import io
import json
import subprocess
import sys

import pytest

from quiverhh.cli import emit, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_hh_rose2(data_dir):
    r = call_json("hh", data_dir / "rose2.json", "--max-weight", 4)
    assert [(w["m"], w["hh0"], w["hh1"]) for w in r["weights"]] == [
        (0, 0, 0),
        (1, 2, 2),
        (2, 3, 3),
        (3, 4, 4),
        (4, 6, 6),
    ]
    assert r["profile"]["dims"] == ["inf", "inf"] and r["field_char"] == 0


def test_hh_negative_and_char(data_dir):
    r = call_json("hh", data_dir / "rose1.txt", "--max-weight", 2, "--negative", "--char", 5)
    assert [w["m"] for w in r["weights"]] == [-2, -1, 0, 1, 2]
    assert all(w["hh0"] == w["hh1"] == 1 for w in r["weights"])


def test_hh_proper_source_exit_3(data_dir):
    code, out, err = call("hh", data_dir / "line2.json")
    assert code == 3 and "--eliminate-sources" in err and out == ""
    r = call_json("hh", data_dir / "line2.json", "--eliminate-sources", "--max-weight", 1)
    assert r["weights"][0] == {"m": 0, "hh0": 1, "hh1": 0}


def test_hh_cap_exit_4():
    code, _, err = call("hh", "rose(2)", "--max-weight", 12, "--path-cap", 100, "--no-fallback")
    assert code == 4 and "cap" in err
    r = call_json("hh", "rose(2)", "--max-weight", 12, "--path-cap", 100)
    assert r["dimension_only"] is True


def test_distinguish(data_dir):
    rose2 = data_dir / "rose2.json"
    r = call_json("distinguish", rose2, f"{rose2},{rose2}")
    assert r["verdict"] == "DISTINGUISHED" and r["witness_degree"] == 2
    r = call_json("distinguish", f"Linf,{rose2}", rose2)
    assert r["verdict"] == "DISTINGUISHED" and r["witness_degree"] == 2
    r = call_json("distinguish", f"inf:{rose2}", f"{rose2},{rose2},{rose2}")
    assert r["witness_degree"] == 4
    r = call_json("distinguish", f"{rose2},{rose2}", "rose(3),rose(3)")
    assert r["verdict"] == "NOT_DISTINGUISHED" and r["witness_degree"] is None


def test_distinguish_acyclic_factor_exit_3(data_dir):
    code, _, _ = call("distinguish", data_dir / "line2.json", "rose(2)")
    assert code == 3


def test_tensor(data_dir):
    r = call_json("tensor", f"{data_dir / 'cycle2.txt'},rose(2),rose(1)")
    assert r["top_degree"] == 3 and r["profile"]["dims"] == ["inf"] * 4
    r = call_json("tensor", "inf:rose(1)")
    assert r["top_degree"] == "inf" and r["profile"]["all_degrees_nonzero"]


def test_k_and_prop63(data_dir):
    assert call_json("k", data_dir / "rose2.json") == {
        "k0": {"free": 0, "torsion": []},
        "k1_free": 0,
        "kind": "k",
        "provenance": call_json("k", "rose(2)")["provenance"],
    }
    assert call_json("k", data_dir / "e2.txt")["k0"] == {"free": 1, "torsion": []}
    r = call_json("prop63", "--group", "Z^2+Z/6", "--n", 3)
    assert r["isomorphic"] and r["quotient"] == "Z^2+Z/6"
    code, _, _ = call("prop63", "--group", "Q", "--n", 2)
    assert code == 2


def test_k_table_format():
    code, out, _ = call("k", "rose(2)", "--format", "table")
    assert code == 0 and out == "K0 = Z/1 (trivial), K1 free rank = 0\n"


def test_hh_table_format():
    code, out, _ = call("hh", "rose(2)", "--max-weight", 4, "--format", "table")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 + 5 + 1
    assert lines[2].split() == ["0", "0", "0"] and lines[6].split() == ["4", "6", "6"]
    assert "inf" in lines[-1]


def test_distinguish_table_format():
    code, out, _ = call("distinguish", "rose(2)", "rose(2),rose(2)", "--format", "table")
    assert code == 0 and out.splitlines()[0] == "DISTINGUISHED at degree 2"


def test_info(data_dir):
    r = call_json("info", data_dir / "e2.txt", "--max-weight", 3)
    assert r["sinks"] == ["w"] and r["vertex_order"] == ["w", "v"]
    assert r["one_minus_nt"] == [[-2], [-1]]
    assert [lay["orbits"] for lay in r["layers"]] == [2, 3, 4]


def test_oracle(data_dir):
    r = call_json("oracle", data_dir / "rose2.json", "--level", 1, "--weight", 2, "--check-induced", "--seed", 7)
    assert r["dims"] == [4, 0] and r["agree"]
    assert r["induced"]["sigma_ok"] and r["induced"]["phi_ok"] and r["induced"]["orientation"] == "sigma"
    r = call_json("oracle", "e_n(2)", "--level", 1, "--weight", 0, "--max-degree", 2)
    assert r["dims"] == [3, 0, 0] and r["agree"]


def test_oracle_errors(data_dir):
    assert call("oracle", data_dir / "line2.json", "--level", 1, "--weight", 1)[0] == 3
    assert call("oracle", "rose(2)", "--level", 2, "--weight", 1, "--max-degree", 2, "--chain-cap", 10)[0] == 4
    assert call("oracle", "rose(2)", "--level", 1, "--weight", 0, "--check-induced")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["hh"],
        ["hh", "rose(2)", "--max-weight", "x"],
        ["hh", "rose(2)", "--char", "4"],
        ["distinguish", "rose(2)", "rose(2),,rose(2)"],
        ["tensor", "inf:rose(2),inf:rose(1)"],
    ],
)
def test_usage_errors_exit_1(argv):
    assert call(*argv)[0] == 1


@pytest.mark.parametrize("name", ["missing.json", "bad.txt"])
def test_parse_errors_exit_2(tmp_path, name):
    path = tmp_path / name
    if name == "bad.txt":
        path.write_text("v\na: v -> nowhere\n")
    assert call("hh", path)[0] == 2


def test_json_round_trip_and_determinism(data_dir):
    commands = [
        ["hh", data_dir / "rose2.json", "--max-weight", 3],
        ["info", data_dir / "cycle2.txt"],
        ["distinguish", "inf:rose(2)", "rose(2)"],
        ["tensor", "Linf,rose(2)"],
        ["k", "rose(4)"],
        ["prop63", "--group", "Z/5", "--n", 2],
        ["oracle", "cycle(2)", "--level", 1, "--weight", 2, "--check-induced", "--seed", 3],
    ]
    for argv in commands:
        code, out, _ = call(*argv)
        assert code == 0 and out.endswith("\n")
        assert emit(json.loads(out)) == out
        assert call(*argv)[1] == out


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "quiverhh", "k", "rose(3)"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["k0"] == {"free": 0, "torsion": [2]}
