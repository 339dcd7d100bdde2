import json
import subprocess
import sys
from pathlib import Path

import pytest

from bmoment.cli import main
from bmoment.verify import SUITES

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassify:
    def test_btorus(self, capsys):
        code, out, _ = run(capsys, "classify-graph", DATA / "btorus_graph.json")
        assert code == 0 and json.loads(out)["class"] == "all_nonzero"

    def test_all_zero(self, capsys):
        code, out, _ = run(capsys, "classify-graph", DATA / "zero_graph.json")
        assert code == 0 and json.loads(out) == {"class": "all_zero"}

    def test_mixed(self, capsys):
        code, out, _ = run(capsys, "classify-graph", DATA / "mixed_graph.json")
        assert code == 2 and "dichotomy theorem" in json.loads(out)["error"]

    def test_malformed_json_reports_position(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"torus_dim": 1,\n "vertices": [}')
        code, _, err = run(capsys, "classify-graph", f)
        assert code == 1 and "line 2 column" in err

    def test_schema_error(self, capsys, tmp_path):
        f = tmp_path / "bad.json"
        f.write_text('{"torus_dim": 1}')
        assert run(capsys, "classify-graph", f)[0] == 1

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "classify-graph", tmp_path / "nope.json")[0] == 1


class TestPolytope:
    def test_vertices(self, capsys):
        code, out, _ = run(capsys, "polytope", DATA / "local_graph.json", DATA / "local_halfspaces.json",
                           "vertices")
        got = json.loads(out)["vertices"]
        assert code == 0
        assert got == [{"vertex": v, "xi": [x, "0/1"]} for v in ("minus", "plus") for x in ("0/1", "1/1")]

    def test_validate_unbounded(self, capsys):
        code, out, _ = run(capsys, "polytope", DATA / "local_graph.json",
                           DATA / "unbounded_halfspaces.json", "validate")
        rep = json.loads(out)
        assert code == 2 and not rep["checks"]["meets_infinity"]["passed"]

    def test_vertices_of_invalid(self, capsys):
        code, _, _ = run(capsys, "polytope", DATA / "local_graph.json",
                         DATA / "unbounded_halfspaces.json", "vertices")
        assert code == 2

    def test_contains_exceptional(self, capsys):
        code, out, _ = run(capsys, "polytope", DATA / "local_graph.json", DATA / "local_halfspaces.json",
                           "contains", DATA / "exceptional_point.json")
        assert code == 0 and json.loads(out)["contains"] is True

    def test_contains_needs_point(self, capsys):
        assert run(capsys, "polytope", DATA / "local_graph.json", DATA / "local_halfspaces.json",
                   "contains")[0] == 1

    def test_wrong_halfspace_type(self, capsys, tmp_path):
        f = tmp_path / "hs.json"
        f.write_text('[{"type": "global", "normal": [0, 1], "bound": "0/1"}]')
        assert run(capsys, "polytope", DATA / "local_graph.json", f, "validate")[0] == 2


class TestMoment:
    def test_bsphere(self, capsys, tmp_path):
        out = tmp_path / "s.csv"
        code, summary, _ = run(capsys, "moment", DATA / "b_sphere.json", "--samples", 100, "--seed", 7,
                               "--out", out)
        rows = out.read_text().splitlines()
        assert code == 0 and len(rows) == 101 and rows[0] == "z,theta,mu_1,z_flag"
        assert all(float(r.split(",")[2]) >= -1e-12 for r in rows[1:])
        assert json.loads(summary)["samples"] == 100

    def test_local_model(self, capsys, tmp_path):
        out = tmp_path / "s.csv"
        assert run(capsys, "moment", DATA / "local_model.json", "--samples", 100, "--out", out)[0] == 0
        mu1 = [float(r.split(",")[4]) for r in out.read_text().splitlines()[1:]]
        assert all(0.0 <= m <= 1.0 for m in mu1)

    def test_zero_samples(self, capsys, tmp_path):
        code, _, err = run(capsys, "moment", DATA / "b_sphere.json", "--samples", 0, "--out", tmp_path / "x")
        assert code == 1 and "samples must be >= 1" in err

    def test_unknown_family(self, capsys, tmp_path):
        f = tmp_path / "spec.json"
        f.write_text('{"family": "klein_bottle"}')
        assert run(capsys, "moment", f, "--samples", 5, "--out", tmp_path / "x")[0] == 1

    def test_byte_identical(self, capsys, tmp_path):
        outs = []
        for name in ("a.csv", "b.csv"):
            _, summary, _ = run(capsys, "moment", DATA / "local_model.json", "--samples", 300, "--seed", 4,
                                "--out", tmp_path / name)
            outs.append((summary.replace(name, ""), (tmp_path / name).read_bytes()))
        assert outs[0] == outs[1]


class TestVerify:
    @pytest.mark.parametrize("suite", SUITES)
    def test_suite_passes_and_is_deterministic(self, capsys, suite):
        code, out1, err = run(capsys, "verify", suite)
        assert code == 0, out1
        assert run(capsys, "verify", suite)[1] == out1
        rep = json.loads(out1)
        assert rep["passed"] and all(c["citation"] for c in rep["checks"])
        assert "s" in err   # runtime goes to stderr

    def test_mixed_graph(self, capsys):
        assert run(capsys, "verify", "dichotomy", "--graph", DATA / "mixed_graph.json")[0] == 2

    def test_pure_graph(self, capsys):
        assert run(capsys, "verify", "dichotomy", "--graph", DATA / "btorus_graph.json")[0] == 0

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "everything")[0] == 1

    def test_samples_override(self, capsys):
        code, out, _ = run(capsys, "verify", "cut", "--samples", 500)
        assert code == 0


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "moment", DATA / "b_sphere.json")[0] == 1


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "bmoment", "classify-graph", str(DATA / "zero_graph.json")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["class"] == "all_zero"
