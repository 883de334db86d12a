import json

import pytest

from czdglab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_text_report(capsys):
    code, out, err = run_cli(capsys, "info", "Z16")
    assert code == 0
    assert "order: 16" in out
    assert "local: yes" in out
    assert "nonzero zero divisors: 7" in out
    assert "Path(3)" in out
    assert "[2] = {2, 6, 10, 14}" in out


def test_info_json_round_trips_byte_identically(capsys):
    code, out, _ = run_cli(capsys, "info", "Z16", "--json")
    assert code == 0
    body = out.rstrip("\n")
    data = json.loads(body)
    assert json.dumps(data, indent=2, sort_keys=True) == body
    assert data["order"] == 16
    assert data["czdg"]["ddim"] == 2
    assert data["zdg"]["vertices"] == 7


def test_info_integral_domain_markers(capsys):
    code, out, _ = run_cli(capsys, "info", "GF(9)")
    assert code == 0
    assert "undefined (the ring is an integral domain)" in out
    code, out, _ = run_cli(capsys, "info", "GF(9)", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["zdg"] is None and data["czdg"] is None


def test_info_dot_output(capsys):
    code, out, _ = run_cli(capsys, "info", "Z16", "--dot", "czdg")
    assert code == 0
    assert "graph czdg {" in out
    assert 'label="[8]"' in out


def test_info_dot_on_integral_domain_fails_before_printing(capsys):
    code, out, err = run_cli(capsys, "info", "GF(9)", "--dot", "zdg")
    assert code == 3
    assert out == ""
    assert "no nonzero zero divisors" in err


def test_exit_codes():
    assert main(["info", "Z4[x]/("]) == 2
    assert main(["info", "GF(6)"]) == 2
    assert main(["info", "Z100000"]) == 4
    assert main(["atlas", "--max-order", "99999"]) == 4
    assert main(["atlas"]) == 1  # --max-order is required
    assert main(["verify", "--only", "BOGUS"]) == 1
    assert main(["nonsense"]) == 1
    assert main([]) == 1


@pytest.fixture()
def graph_file(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_solve_modes(capsys, graph_file):
    path = graph_file("7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n")
    expected = {"gamma": 3, "dim": 2, "ddim": 3}
    for mode, value in expected.items():
        code, out, _ = run_cli(capsys, "solve", path, "--mode", mode)
        assert code == 0
        data = json.loads(out)
        assert data["mode"] == mode
        assert data["optimum"] == value
        assert len(data["witness"]) == value
        assert all(isinstance(w, str) for w in data["witness"])


def test_solve_error_paths(capsys, graph_file):
    assert main(["solve", "/no/such/file", "--mode", "dim"]) == 2
    bad = graph_file("3\n0 9\n")
    assert main(["solve", bad, "--mode", "dim"]) == 2
    disconnected = graph_file("4\n0 1\n2 3\n")
    assert main(["solve", disconnected, "--mode", "dim"]) == 3
    assert main(["solve", disconnected, "--mode", "gamma"]) == 0
    capsys.readouterr()


def test_atlas_csv(capsys):
    code, out, _ = run_cli(capsys, "atlas", "--max-order", "12", "--families", "zn", "--csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("spec,order,is_field")
    assert len(lines) == 12  # header + Z2..Z12
    z4 = next(line for line in lines if line.startswith("Z4,"))
    cells = z4.split(",")
    assert cells[1] == "4"
    assert "undefined" not in z4
    z5 = next(line for line in lines if line.startswith("Z5,"))
    assert "undefined" in z5
    assert "inf" in out  # girth of acyclic graphs stays textual
    assert "." not in out.replace("...", "")  # no floating point leaks


def test_atlas_json_round_trips(capsys):
    code, out, _ = run_cli(capsys, "atlas", "--max-order", "8", "--families", "zn,products", "--json")
    assert code == 0
    body = out.rstrip("\n")
    data = json.loads(body)
    assert json.dumps(data, indent=2, sort_keys=True) == body
    specs = [row["spec"] for row in data]
    assert "Z8" in specs
    assert "GF(2) x GF(2)" in specs


def test_atlas_rejects_unknown_family():
    assert main(["atlas", "--max-order", "12", "--families", "zn,bogus"]) == 1


def test_verify_only_subset(capsys):
    code, out, _ = run_cli(capsys, "verify", "--only", "P3.3b,T4.1ii")
    assert code == 0
    assert "P3.3b" in out and "T4.1ii" in out
    assert "PASS" in out
    code, out, _ = run_cli(capsys, "verify", "--only", "E1.1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["status"] == "FAIL(known)"
    assert data[0]["claimed"] and data[0]["computed"]
