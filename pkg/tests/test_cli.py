import io
import json
import subprocess
import sys

import pytest

from canmma.cli import main
from canmma.fileio import factor_data_from_dict, factor_data_to_dict, load_singularity
from canmma.errors import InvalidFactorData
from canmma.graphs import LabeledGraph
from canmma.presentation import Quiver


def write(tmp_path, name, primes, factors):
    p = tmp_path / name
    p.write_text(json.dumps({"primes": primes, "factors": factors}))
    return str(p)


@pytest.fixture
def files(tmp_path):
    return {
        "a31": write(tmp_path, "a31.json", [{"id": 1, "poly": "x"}, {"id": 2, "poly": "y"}], [1, 1, 1, 2]),
        "a23": write(tmp_path, "a23.json", [{"id": 1}, {"id": 2}], [1, 1, 2, 2, 2]),
        "six": write(tmp_path, "six.json", [{"id": i} for i in range(1, 7)], [1, 2, 3, 4, 5, 6]),
        "xxy": write(tmp_path, "xxy.json", [{"id": 1, "poly": "x"}, {"id": 2, "poly": "y"}], [1, 1, 2]),
        "xy": write(tmp_path, "xy.json", [{"id": 1, "poly": "x"}, {"id": 2, "poly": "y"}], [1, 2]),
        "m2": write(tmp_path, "m2.json", [{"id": 1, "poly": "x^2 + y^3"}, {"id": 2, "poly": "x"}], [1, 2]),
        "d3": write(tmp_path, "d3.json", [{"id": 1}, {"id": 2}, {"id": 3}], [1, 2, 3]),
        "a22": write(tmp_path, "a22.json", [{"id": 1}, {"id": 2}], [1, 1, 2, 2]),
    }


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_classify(files):
    code, out = run(["classify", files["a31"], "--flag", "[[1],[1,2],[1,2,3]]"])
    assert code == 0
    assert out.strip() == "modifying: true, MM: true, CT: true"
    code, out = run(["classify", files["m2"], "--flag", "[[1]]"])
    assert out.strip() == "modifying: true, MM: true, CT: false"
    code, out = run(["classify", files["a23"], "--flag", "[[1]]"])
    assert "MM: false" in out and "CT: unknown" in out


def test_exchange_graph_dot(files):
    code, out = run(["exchange-graph", files["a23"], "--format", "dot"])
    assert code == 0
    nodes = [ln for ln in out.splitlines() if ln.strip().endswith(";") and "--" not in ln]
    assert len(nodes) == 10
    assert '"11333" -- "13133" [label="2"];' in out


def test_exchange_graph_json_roundtrip(files):
    code, out = run(["exchange-graph", files["a31"], "--format", "json"])
    g = LabeledGraph.from_dict(json.loads(out))
    assert g.vertices == ("1114", "1141", "1411", "4111")
    assert g.to_dict() == json.loads(out)
    code, out2 = run(["exchange-graph", files["a31"], "--format", "json", "--start", "4111"])
    assert json.loads(out2) == json.loads(out)


def test_mutate(files):
    code, out = run(["mutate", files["six"], "--flag", "[[2,3],[1,2,3]]", "--J", "2", "--format", "json"])
    data = json.loads(out)
    assert code == 0
    assert data["text"] == "f2f3 | f4f5f6 | f1"
    assert data["result_flag"] == [[2, 3], [2, 3, 4, 5, 6]]
    assert data["fixed"] is False


def test_picture_and_reduce(files):
    code, out = run(["picture", files["six"], "--flag", "[[2,3],[1,2,3]]"])
    assert out.strip() == "f2f3 | f1 | f4f5f6"
    code, out = run(["reduce", files["xxy"], "--flag", "[[1]]", "--format", "json"])
    data = json.loads(out)
    assert [p["g"] for p in data["pieces"]] == ["x", "x*y"]


def test_hasse_and_iso_check(files):
    code, out = run(["hasse", "--n", "3", "--format", "json"])
    g = LabeledGraph.from_dict(json.loads(out))
    assert len(g.vertices) == 6 and len(g.edges) == 6
    code, out = run(["iso-check", files["d3"]])
    assert code == 0 and "exchange graph isomorphic" in out
    code, out = run(["iso-check", files["a22"]])
    assert "not isomorphic" in out
    code, out = run(["iso-check", files["a22"], "--word", "1133", "--word2", "3311", "--format", "json"])
    assert json.loads(out)["isomorphic"] is False
    code, out = run(["iso-check", files["a22"], "--flag", "[[1],[1,2],[1,2,3]]", "--word2", "1133"])
    assert "T^F isomorphic" in out


def test_class_group(files):
    code, out = run(["class-group", files["a23"], "--subset", "1,2", "--vector", "3,1", "--format", "json"])
    data = json.loads(out)
    assert data["structure"] == "Z"
    assert data["subset"]["class"] == [0, -3]
    assert data["vector"]["class"] == [1, -2]
    code, out = run(["class-group", files["a22"]])
    assert "Z + Z/2" in out


def test_quiver(files):
    code, out = run(["quiver", files["xy"], "--flag", "[[1]]", "--format", "json"])
    q = Quiver.from_dict(json.loads(out))
    assert len(q.arrows) == 4 and all(not ls for ls in q.loops().values())
    code, out = run(["quiver", files["xy"], "--flag", "[[1]]", "--format", "dot"])
    assert out.startswith("digraph")
    code, _ = run(["quiver", files["a23"], "--flag", "[[1]]"])
    assert code == 1


def test_mf_verify(files):
    code, out = run(["mf-verify", files["xxy"], "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["all_ok"] and len(data["results"]) == 8
    code, out = run(["mf-verify", files["xxy"], "--subset", "1,3"])
    assert "I=[1, 3]: ok" in out


def test_derived_equiv(files):
    code, out = run(["derived-equiv", files["xxy"], "--flag", "[[1]]", "--flag2", "[[1,3]]"])
    assert "derived equivalent: true" in out
    code, out = run(["derived-equiv", files["xxy"], "--flag", "[[1]]", "--flag2", "[[3]]", "--format", "json"])
    data = json.loads(out)
    assert data["sufficient"] is False and data["only_first"] == [[1, 0], [1, 1]]


def test_count(files):
    code, out = run(["count", files["a23"], "--format", "json"])
    data = json.loads(out)
    assert code == 0 and data["formula"] == data["enumerated"] == 10


def test_validate(files, tmp_path, capsys):
    code, out = run(["validate", files["a31"]])
    assert code == 0 and out.startswith("ok: n=4 t=2 a=[3, 1]")
    warn = write(tmp_path, "w.json", [{"id": 1, "poly": "x"}, {"id": 2, "poly": "2*x"}], [1, 2])
    code, out = run(["validate", warn])
    assert code == 0 and "scalar-multiple" in capsys.readouterr().err


@pytest.mark.parametrize("doc, msg", [
    ({"primes": [{"id": 1}], "factors": [1, 2]}, "not a prime id"),
    ({"primes": [{"id": 1}, {"id": 3}], "factors": [1]}, "exactly 1..2"),
    ({"primes": [{"id": 1}, {"id": 2}], "factors": [1]}, "no prime"),
    ({"primes": [{"id": 1, "poly": "x"}, {"id": 2}], "factors": [1, 2]}, "every prime"),
    ({"primes": [{"id": 1, "poly": "1 + x"}], "factors": [1]}, "constant term"),
    ({"primes": [{"id": 1, "poly": "x ^"}], "factors": [1]}, "position"),
    ({"factors": [1]}, "missing key"),
])
def test_invalid_files(tmp_path, capsys, doc, msg):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, _ = run(["validate", str(p)])
    assert code == 1
    assert msg in capsys.readouterr().err


def test_error_exit_codes(files, tmp_path, capsys):
    assert run(["frobnicate"])[0] == 2
    assert run(["classify", files["a31"], "--flag", "not json"])[0] == 2
    assert run(["classify", files["a31"], "--flag", "[[1],[1]]"])[0] == 1
    assert run(["mutate", files["six"], "--flag", "[[1]]", "--J", "3"])[0] == 1
    broken = tmp_path / "broken.json"
    broken.write_text("{\n  oops")
    assert run(["validate", str(broken)])[0] == 1
    assert "broken.json:2:" in capsys.readouterr().err
    assert run(["validate", str(tmp_path / "missing.json")])[0] == 1


def test_file_roundtrip(files):
    fd = load_singularity(files["a31"])
    assert factor_data_from_dict(factor_data_to_dict(fd)) == fd
    with pytest.raises(InvalidFactorData):
        factor_data_from_dict([])


def test_console_script_is_deterministic(files):
    cmd = [sys.executable, "-m", "canmma.cli", "exchange-graph", files["a23"], "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True, env={"CANMMA_THREADS": "4"}).stdout
    assert first == second and first
