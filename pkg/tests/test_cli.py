import json
import subprocess
import sys

import pytest

from steinhaus.cli import main

SIZE7_RENDER = """\
0 0 1 0 1 0 0
 0 1 1 1 1 0
  1 0 0 0 1
   1 0 0 1
    1 0 1
     1 1
      0
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_render_triangle(capsys):
    assert run(capsys, "render", "triangle", "0010100") == (0, SIZE7_RENDER, "")


def test_render_empty(capsys):
    assert run(capsys, "render", "triangle", "") == (0, "", "")


def test_render_matrix(capsys):
    code, out, _ = run(capsys, "render", "matrix", "0010100")
    assert code == 0 and out.splitlines()[3] == "1 1 1 0 1 0 0 1"


def test_render_pascal_and_graph_json(capsys):
    code, out, _ = run(capsys, "render", "pascal", "11100", "11001", "--format", "json")
    assert json.loads(out) == {"n": 5, "left": "11100", "right": "11001"}
    code, out, _ = run(capsys, "render", "graph", "101", "--format", "json")
    assert json.loads(out)["edges"] == [[1, 2], [1, 4], [2, 3], [2, 4]]


@pytest.mark.parametrize("argv", [
    ("render", "triangle", "012"),
    ("render", "pascal", "10", "01"),
    ("render", "pascal", "10"),
    ("basis", "foo", "3"),
    ("basis", "rst"),
    ("basis", "rst", "x"),
    ("basis", "hst", "5", "--l", "1"),
    ("basis", "rst", "10", "--bogus"),
    ("basis", "rst", "10", "--space", "hst"),
])
def test_usage_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_basis_listing(capsys):
    code, out, _ = run(capsys, "basis", "rst", "10")
    assert out.splitlines() == ["space=rst n=10 dim=4", "0111111110", "1001010111",
                                "0001001000", "0010001100"]
    code, out, _ = run(capsys, "basis", "--space", "esg", "--n", "12")
    assert out.splitlines()[1:] == ["11111111110", "01101010110", "10011001000"]
    code, out, _ = run(capsys, "basis", "hst", "0")
    assert (code, out) == (0, "space=hst n=0 dim=0\n")


def test_basis_pascal_and_json(capsys):
    code, out, _ = run(capsys, "basis", "dpt", "11")
    assert out.splitlines()[1] == "10000000001 10000000001"
    code, out, _ = run(capsys, "basis", "dst", "22", "--format", "json")
    d = json.loads(out)
    assert d["class"] == "D" and d["index_set"][3] == [7, 15]


def test_basis_offsets(capsys):
    code, out, _ = run(capsys, "basis", "rst", "10", "--l", "0,0,0,0")
    assert code == 0 and out.splitlines()[2] == "1001010111"


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "rst", "10")
    assert code == 0 and len(out.splitlines()) == 16
    code, out, _ = run(capsys, "enum", "dst", "6")
    assert out.splitlines() == ["coords=0 first_row=000000", "coords=1 first_row=011110"]
    code, out, _ = run(capsys, "enum", "st", "0")
    assert out == "coords= first_row=\n"
    code, out, _ = run(capsys, "enum", "hpt", "2")
    assert out.splitlines()[1] == "coords=01 left=10 right=10"


def test_enum_guard(capsys):
    code, _, err = run(capsys, "enum", "st", "25")
    assert code == 2 and "guard" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "gensets")
    assert code == 0 and "n=3: 16" in out.splitlines()
    code, out, _ = run(capsys, "verify", "dims", "--cap", "0")
    assert code == 0 and all(line.startswith("PASS") for line in out.splitlines())


def test_verify_failure_exit_code(capsys, monkeypatch):
    from steinhaus import subspace

    monkeypatch.setattr(subspace, "dim", lambda cls, n: n + 1)
    code, out, _ = run(capsys, "verify", "dims", "--cap", "2")
    assert code == 1 and "FAIL" in out


def test_output_is_deterministic(capsys):
    first = run(capsys, "enum", "esg", "12")
    assert run(capsys, "enum", "esg", "12") == first


def test_entry_point_module():
    res = subprocess.run([sys.executable, "-m", "steinhaus.cli", "basis", "hpt", "4"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[-1] == "1000 1000"
