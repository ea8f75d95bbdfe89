import json

import jsonschema
import pytest

from circlet import generators as gen
from circlet.cli import run_cli
from circlet.complex import serialize_complex

SCHEMAS = {
    "check": {"type": "object",
              "required": ["schema", "vertices", "edges", "faces", "even",
                           "strongly_connected", "circlet", "kernel_dim"],
              "properties": {"schema": {"const": 1}, "even": {"type": "boolean"},
                             "kernel_dim": {"type": "integer"}}},
    "decompose": {"type": "object", "required": ["schema", "parts", "circlet", "kernel_dim"],
                  "properties": {"parts": {"type": "array",
                                           "items": {"type": "array",
                                                     "items": {"type": "string"}}},
                                 "circlet": {"type": "boolean"}}},
    "report": {"type": "object",
               "required": ["schema", "p", "q", "r", "chi", "orientable", "name", "components",
                            "splices"]},
    "census": {"type": "object",
               "required": ["schema", "total", "p_min", "p_max", "histogram", "records",
                            "surface_names"],
               "properties": {"records": {"type": "array",
                                          "items": {"type": "object",
                                                    "required": ["index", "p", "chi",
                                                                 "components", "surfaces"]}}}},
}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, K in [("d5", gen.simplex_skeleton(5)), ("figure2", gen.figure2_complex()),
                    ("d4", gen.simplex_skeleton(4)), ("two", gen.two_tetra_shared_edge())]:
        path = tmp_path / f"{name}.2c"
        path.write_text(serialize_complex(K))
        out[name] = str(path)
    out["dir"] = tmp_path
    return out


def run_json(capsys, argv, schema):
    code = run_cli(argv + ["--json"])
    captured = capsys.readouterr()
    data = json.loads(captured.out)
    jsonschema.validate(data, SCHEMAS[schema])
    run_json.last_err = captured.err
    return code, data


def test_check_d5(files, capsys):
    code, data = run_json(capsys, ["check", files["d5"]], "check")
    assert code == 0
    assert data["even"] and data["strongly_connected"] and not data["circlet"]


def test_check_text_output(files, capsys):
    assert run_cli(["check", files["d5"]]) == 0
    out = capsys.readouterr().out
    assert "circlet             False" in out


def test_check_odd_edge_exits_1(files, capsys):
    code, data = run_json(capsys, ["check", files["d4"]], "check")
    assert code == 1
    assert data["odd_edge"] == {"edge": "e1_2", "degree": 3}
    assert "e1_2" in run_json.last_err


def test_input_errors_exit_2(files, capsys):
    assert run_cli(["check", str(files["dir"] / "missing.2c")]) == 2
    bad = files["dir"] / "bad.2c"
    bad.write_text("vertex 1\nedge a 1 2\n")
    assert run_cli(["check", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    assert run_cli(["frobnicate"]) == 2


def test_decompose(files, capsys):
    code, data = run_json(capsys, ["decompose", files["two"]], "decompose")
    assert code == 0 and len(data["parts"]) == 2 and data["kernel_dim"] == 2
    assert run_cli(["decompose", files["d4"]]) == 1


def test_census_figure2(files, capsys):
    code, data = run_json(capsys, ["census", files["figure2"]], "census")
    assert code == 0
    assert len(data["records"]) == 81 == data["total"]
    assert (data["p_min"], data["p_max"]) == (36, 40)
    # seven types are attainable for this complex; see README
    assert len(data["surface_names"]) == 7


def test_census_limit_and_env(files, capsys, monkeypatch):
    assert run_cli(["census", files["figure2"], "--limit", "10"]) == 1
    monkeypatch.setenv("CIRCLET_LIMIT", "50")
    assert run_cli(["census", files["figure2"]]) == 1
    monkeypatch.setenv("CIRCLET_LIMIT", "100")
    assert run_cli(["census", files["figure2"], "--jobs", "2"]) == 0


def test_cover_options(files, capsys):
    surf = files["dir"] / "two.surf"
    code, data = run_json(capsys, ["cover", files["two"], "--respect-decomposition",
                                   "--emit-surface", str(surf)], "report")
    assert code == 0 and data["components"] == 2
    assert run_cli(["classify", str(surf), "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["name"] == "sphere + sphere"

    assign = files["dir"] / "a.txt"
    from circlet.cover import canonical_assignment
    from circlet.serialize import serialize_assignment

    A = canonical_assignment(gen.two_tetra_shared_edge())
    f = sorted(A["e1_2"][0] + A["e1_2"][1])
    A["e1_2"] = ((f[0], f[2]), (f[1], f[3]))
    assign.write_text(serialize_assignment(A))
    code, data = run_json(capsys, ["cover", files["two"], "--assignment", str(assign)], "report")
    assert code == 0 and data["components"] == 1

    assign.write_text("match e1_2 At1_2_3 At1_2_4\n")
    assert run_cli(["cover", files["two"], "--assignment", str(assign)]) == 2


def test_euler_cover_trace(files, capsys):
    assert run_cli(["euler-cover", files["d5"], "--trace"]) == 0
    lines = capsys.readouterr().out.splitlines()
    steps = [json.loads(x) for x in lines[:3]]
    assert [s["components"] for s in steps] == [3, 2, 1]
    assert "sphere" in lines[3]
    assert run_cli(["euler-cover", files["d4"]]) == 1


def test_gen(capsys):
    from circlet.complex import parse_complex

    assert run_cli(["gen", "figure2"]) == 0
    assert parse_complex(capsys.readouterr().out).counts == (36, 76, 40)
    assert run_cli(["gen", "crosspoly", "4"]) == 0
    assert parse_complex(capsys.readouterr().out).counts == (8, 24, 32)
    assert run_cli(["gen", "simplex-decomposition", "5"]) == 0
    parts = json.loads(capsys.readouterr().out)["parts"]
    assert sorted(map(len, parts)) == [4, 4, 4, 8]
    assert run_cli(["gen", "simplex"]) == 2
    assert run_cli(["gen", "simplex-decomposition", "4"]) == 2


def test_output_is_deterministic(files, capsys):
    outputs = []
    for _ in range(2):
        run_cli(["census", files["figure2"], "--json"])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
