import json

from linetopo import build_arrangement, serialize_arrangement
from linetopo.cli import run_cli

PENCIL3 = serialize_arrangement(
    build_arrangement(
        3, [((0, 0, 0), (1, 0, 0)), ((0, 0, 0), (0, 1, 0)), ((0, 0, 0), (0, 0, 1))]
    )
)

ONE_LINE3 = serialize_arrangement(build_arrangement(3, [((0, 0, 0), (1, 0, 0))]))


def run(capsys, argv, stdin_text=None, tmp_path=None):
    if stdin_text is not None:
        path = tmp_path / "input.json"
        path.write_text(stdin_text, encoding="utf-8")
        argv = argv + [str(path)]
    code = run_cli(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_pencil(capsys, tmp_path):
    code, out, _ = run(capsys, ["analyze"], PENCIL3, tmp_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["g"] == 5
    assert doc["report"]["betti"] == [1, 5, 0, 0]
    assert doc["self_check"]["agree"] is True
    assert doc["self_check"]["trace_g"] == 5
    assert doc["poset"]["recovered"] == {"d": 3, "t": {"3": 1}}
    assert doc["verification"] is None
    assert doc["input_digest"].startswith("sha256:")


def test_analyze_is_byte_identical(capsys, tmp_path):
    code1, out1, _ = run(capsys, ["analyze"], PENCIL3, tmp_path)
    code2, out2, _ = run(capsys, ["analyze"], PENCIL3, tmp_path)
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_verify_exit_zero_on_match(capsys, tmp_path):
    code, out, _ = run(capsys, ["verify", "--grid", "16"], ONE_LINE3, tmp_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["verification"]["measured"] == [1, 1, 0, 0]
    assert doc["verification"]["match"] is True


def test_sweep_rejects_non_generic_direction(capsys, tmp_path):
    code, out, err = run(capsys, ["sweep", "--direction", "0,0,1"], ONE_LINE3, tmp_path)
    assert code == 2
    doc = json.loads(out)
    assert doc["error"]["type"] == "NonGenericDirection"
    assert "condition i" in doc["error"]["message"]
    assert err.strip()


def test_sweep_emits_plan_and_trace(capsys, tmp_path):
    code, out, _ = run(capsys, ["sweep"], PENCIL3, tmp_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["plan"]["initial_rays_down"] == 3
    assert doc["trace"]["final_g"] == 5
    assert doc["trace"]["conclusion"]["betti"] == [1, 5, 0, 0]


def test_duplicate_line_input_error(capsys, tmp_path):
    bad = json.dumps(
        {
            "dimension": 2,
            "lines": [
                {"point": ["0", "0"], "direction": ["1", "0"]},
                {"point": ["3", "0"], "direction": ["-2", "0"]},
            ],
        }
    )
    code, out, _ = run(capsys, ["analyze"], bad, tmp_path)
    assert code == 2
    doc = json.loads(out)
    assert doc["error"]["type"] == "DuplicateLine"
    assert "0" in doc["error"]["message"] and "1" in doc["error"]["message"]


def test_gen_output_feeds_analyze(capsys, tmp_path):
    code, out, _ = run(capsys, ["gen", "--dim", "2", "--count", "4",
                                "--profile", "pencil(3)", "--seed", "12"])
    assert code == 0
    doc = json.loads(out)
    assert doc["dimension"] == 2 and len(doc["lines"]) == 4
    code, out2, _ = run(capsys, ["analyze"], out, tmp_path)
    assert code == 0
    rep = json.loads(out2)["report"]
    assert rep["t"].get("3") == 1


def test_gen_deterministic(capsys):
    argv = ["gen", "--dim", "3", "--count", "5", "--profile", "mixed", "--seed", "4"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0 and out1 == out2


def test_poset_dot_format(capsys, tmp_path):
    code, out, _ = run(capsys, ["poset", "--format", "dot"], PENCIL3, tmp_path)
    assert code == 0
    assert out.startswith("digraph hasse {")
    assert '"p0" -> "l2";' in out


def test_missing_file_is_input_error(capsys):
    code, out, _ = run(capsys, ["analyze", "/nonexistent/path.json"])
    assert code == 2
    assert json.loads(out)["error"]["type"] == "OSError"


def test_analyze_with_grid_includes_verification(capsys, tmp_path):
    code, out, _ = run(capsys, ["analyze", "--grid", "12"], ONE_LINE3, tmp_path)
    assert code == 0
    doc = json.loads(out)
    assert doc["verification"]["match"] is True
