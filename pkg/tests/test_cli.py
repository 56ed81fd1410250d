import json
import subprocess
import sys

import pytest

from cp2bundles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


class TestInfo:
    def test_milnor_one(self, capsys):
        code, rep = run_json(capsys, "info", "--milnor", "1")
        assert code == 0 and rep["status"] == "info"
        p = rep["payload"]
        assert p["r"] == -3 and p["milnor_k"] == 1
        assert p["image_of_R"]["tag"] == "S3" and len(p["image_of_R"]["matrices"]) == 6
        assert p["torelli"]["group"] == "Z_6 ⊕ Z_28"
        assert p["torelli"]["invariant_factors"] == [2, 84]

    def test_r13(self, capsys):
        code, rep = run_json(capsys, "info", "--r", "13")
        p = rep["payload"]
        assert code == 0
        assert p["canonical"] == {"k": 1, "l": -3}
        assert p["image_of_R"] == {"tag": "Z2", "matrices": [[[-1, -1], [0, 1]], [[1, 0], [0, 1]]]}
        assert p["torelli"]["group"] == "Z_6 ⊕ Z_4"
        assert p["spin"] is True
        assert p["c1"] == {"s": -2, "t": -2} and p["p1"] == {"s^2": 16}
        assert p["homotopy"]["pi6"] == "Z_6"

    def test_r7(self, capsys):
        code, out, err = run(capsys, "info", "--r", "7")
        assert code == 2
        assert "r must lie in 4Z+{0,1}" in err and out == ""

    def test_r7_json(self, capsys):
        code, rep = run_json(capsys, "info", "--r", "7")
        assert code == 2 and rep["status"] == "error"
        assert "r must lie in 4Z+{0,1}" in rep["payload"]["error"]

    def test_not_computed(self, capsys):
        code, rep = run_json(capsys, "info", "--k", "0", "--l", "-1")
        assert code == 0 and rep["payload"]["r"] == 4
        assert rep["payload"]["torelli"] == "not computed"
        assert "homotopy" not in rep["payload"]

    def test_even_milnor_with_torelli(self, capsys):
        code, _, err = run(capsys, "info", "--milnor", "2", "--torelli")
        assert code == 2 and "odd" in err

    def test_even_milnor_without_torelli(self, capsys):
        code, rep = run_json(capsys, "info", "--milnor", "2")
        assert code == 0 and rep["payload"]["r"] == -12

    def test_torelli_unavailable(self, capsys):
        code, _, _ = run(capsys, "info", "--r", "4", "--torelli")
        assert code == 2

    def test_missing_selector(self, capsys):
        assert run(capsys, "info")[0] == 2

    def test_conflicting_selectors(self, capsys):
        assert run(capsys, "info", "--r", "5", "--k", "1", "--l", "1")[0] == 2

    def test_text(self, capsys):
        code, out, _ = run(capsys, "info", "--milnor", "1")
        assert code == 0
        assert "image_of_R: S3 (6 matrices)" in out
        assert "torelli: Z_6 ⊕ Z_28" in out


class TestVerify:
    def test_lattice(self, capsys):
        code, rep = run_json(capsys, "verify", "lattice", "--l-min", "-50", "--l-max", "50")
        assert code == 0 and rep["status"] == "pass"
        assert rep["payload"]["cases"] == 101 and rep["payload"]["failed"] == 0

    def test_bordism(self, capsys):
        code, rep = run_json(capsys, "verify", "bordism")
        assert code == 0 and rep["status"] == "pass"
        assert any("M7" in n for n in rep["payload"]["notes"])

    def test_bordism_uncorrected(self, capsys):
        code, rep = run_json(capsys, "verify", "bordism", "--no-m7-correction")
        assert code == 1 and rep["status"] == "fail"
        assert [c["check"] for c in rep["payload"]["results"] if not c["passed"]] == ["row M7"]

    def test_automorphisms_single(self, capsys):
        code, rep = run_json(capsys, "verify", "automorphisms", "--k", "1", "--l", "1", "--bound", "4")
        assert code == 0
        (case,) = rep["payload"]["results"]
        assert case["found"] == 6 and case["passed"]

    def test_automorphisms_box(self, capsys):
        code, rep = run_json(capsys, "verify", "automorphisms", "--k-min", "-2", "--k-max", "2",
                             "--l-min", "-2", "--l-max", "2")
        assert code == 0 and rep["payload"]["cases"] == 25

    def test_table_reports_b2(self, capsys):
        code, rep = run_json(capsys, "verify", "table", "--l-min", "0", "--l-max", "1")
        assert code == 1 and rep["status"] == "fail"
        for case in rep["payload"]["results"]:
            assert case["kernel"]
            assert case["mismatches"] == [{"row": "b2", "column": "s1+s2", "computed": -12, "printed": 12}]

    @pytest.mark.parametrize("argv", [
        ["verify", "lattice", "--l-min", "5", "--l-max", "1"],
        ["verify", "automorphisms", "--k", "1"],
        ["verify", "automorphisms", "--k", "1", "--l", "1", "--bound", "0"],
        ["verify", "automorphisms", "--k-min", "3", "--k-max", "-3"],
    ])
    def test_malformed(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_bad_suite(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense"])
        assert exc.value.code == 2


def test_json_shape_and_round_trip(capsys):
    code, out, err = run(capsys, "info", "--r", "-3", "--json")
    rep = json.loads(out)
    assert list(rep) == ["command", "status", "payload"]
    assert rep["command"] == "info --r -3"
    assert json.loads(json.dumps(rep)) == rep
    assert err == ""


def test_deterministic(capsys):
    first = run(capsys, "verify", "automorphisms", "--k-min", "-1", "--k-max", "1", "--json")[1]
    second = run(capsys, "verify", "automorphisms", "--k-min", "-1", "--k-max", "1", "--json")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cp2bundles", "info", "--r", "13", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["torelli"]["generator_orders"] == {"g2": 6, "g1": 4}
