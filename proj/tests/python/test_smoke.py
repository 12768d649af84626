"""Smoke tests for the python module and the command-line tool."""

import json
import os
import subprocess

import mopf

FRONT9 = {(0, 4), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1), (4, 0), (4, 1)}


def front_images(entries):
    return {tuple(f) for _, f in entries}


def test_builtin_problems():
    p = mopf.builtin("rocket")
    assert p.num_objectives == 4
    assert p.num_integer == 1
    assert p.num_continuous == 3
    assert p.objective_values([0, 0, 0, 0])[0] == 0.692


def test_oracle_counts():
    o = mopf.brute_force_weak_front(mopf.builtin("tp1"))
    assert o["feasible_count"] == 17
    assert front_images(o["front"]) == FRONT9
    o3 = mopf.brute_force_weak_front(mopf.builtin("tp3"))
    assert o3["feasible_count"] == 83
    assert len(o3["front"]) == 60


def test_run_algorithm_matches_oracle():
    r = mopf.run_algorithm(mopf.builtin("tp1"), algorithm=1, grid_n=11)
    assert front_images(r["front"]) == FRONT9
    assert r["report"]["subproblems_attempted"] == 22


def test_run_is_deterministic():
    p = mopf.builtin("tp3")
    kwargs = dict(algorithm=5, grid_n=8, pair_n=8, triplet_n=15)
    a = mopf.run_algorithm(p, **kwargs)
    b = mopf.run_algorithm(p, **kwargs)
    assert a["front"] == b["front"]


def test_dominance_and_filter():
    assert mopf.strictly_dominates([1, 2], [2, 3])
    assert not mopf.strictly_dominates([1, 2], [1, 3])
    kept = mopf.filter_weak_front([[3, 4], [2, 3], [4, 1]])
    assert [2, 3] in kept and [4, 1] in kept and [3, 4] not in kept


def test_load_problem_document():
    doc = {
        "variables": [
            {"name": "a", "kind": "integer", "lower": 0, "upper": 3},
            {"name": "b", "kind": "integer", "lower": 0, "upper": 3},
        ],
        "objectives": ["a", "b"],
        "constraints": ["3 - a - b"],
    }
    p = mopf.load_problem(json.dumps(doc))
    front = mopf.brute_force_weak_front(p)["front"]
    # weak front: the a+b=3 line plus the points only blocked by infeasibility
    assert front_images(front) == {(0, 3), (1, 2), (2, 1), (3, 0), (1, 3), (2, 2), (3, 1)}


def test_expression_evaluation():
    v = mopf.evaluate_expression("(x1-4)^2 + (x2-4)^2 - 16", {"x1": 0.0, "x2": 4.0})
    assert v == 0.0


def cli_path():
    path = os.environ.get("MOPF_CLI")
    assert path and os.path.exists(path), "MOPF_CLI must point at the built binary"
    return path


def test_cli_csv_run(tmp_path):
    out = tmp_path / "front.csv"
    report = tmp_path / "report.json"
    cmd = [cli_path(), "--problem", "builtin:tp1", "--algorithm", "1",
           "--grid-n", "11", "--out", str(out), "--report", str(report)]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "x_1,x_2,f_1,f_2"
    assert lines[1] == "0,4,0,4"
    assert len(lines) == 10
    rep = json.loads(report.read_text())
    assert rep["subproblems_attempted"] == 22
    assert rep["front_size"] == 9

    # byte-identical on rerun
    again = tmp_path / "front2.csv"
    subprocess.run([cli_path(), "--problem", "builtin:tp1", "--algorithm", "1",
                    "--grid-n", "11", "--out", str(again)], check=True)
    assert again.read_bytes() == out.read_bytes()


def test_cli_staged_json_run(tmp_path):
    out = tmp_path / "front.json"
    plot = tmp_path / "front.svg"
    cmd = [cli_path(), "--problem", "builtin:tp3", "--algorithm", "5",
           "--grid-n", "8,15", "--out", str(out), "--plot", str(plot),
           "--projection", "1,3,2"]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    doc = json.loads(out.read_text())
    assert isinstance(doc, list) and len(doc) == 60
    assert set(doc[0]) == {"x", "f"}
    assert plot.read_text().count("<circle") == 60


def test_cli_runs_a_problem_file(tmp_path):
    doc = {
        "name": "disc",
        "variables": [
            {"name": "x1", "kind": "integer", "lower": 0, "upper": 4},
            {"name": "x2", "kind": "integer", "lower": 0, "upper": 4},
        ],
        "objectives": ["x1", "x2"],
        "constraints": ["(x1-4)^2 + (x2-4)^2 - 16"],
    }
    problem = tmp_path / "disc.json"
    problem.write_text(json.dumps(doc))
    out = tmp_path / "front.csv"
    proc = subprocess.run(
        [cli_path(), "--problem", str(problem), "--algorithm", "1",
         "--grid-n", "11", "--utopia", "-10,-10", "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert len(out.read_text().splitlines()) == 10


def test_cli_rejects_unknown_algorithm(tmp_path):
    proc = subprocess.run(
        [cli_path(), "--problem", "builtin:tp1", "--algorithm", "9"],
        capture_output=True, text=True)
    assert proc.returncode != 0
    assert "algorithm" in proc.stderr.lower()
