import json

import pytest
from click.testing import CliRunner

from rackhom import __version__
from rackhom.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _write(path, document):
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


class TestValidate:
    def test_builtin_quandle(self, runner):
        result = runner.invoke(main, ["validate", "--dihedral", "3"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["is_quandle"] is True
        assert payload["table"][0] == [0, 2, 1]

    def test_non_shelf_exits_1_with_witness(self, runner, tmp_path):
        path = _write(tmp_path / "bad.json", {"size": 2, "table": [[1, 0], [0, 1]]})
        result = runner.invoke(main, ["validate", "--shelf", path])
        assert result.exit_code == 1
        assert json.loads(result.stdout)["witness"] == [0, 0, 0]

    def test_malformed_json_exits_2(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("[[0, 1]", encoding="utf-8")
        result = runner.invoke(main, ["validate", "--shelf", str(path)])
        assert result.exit_code == 2

    def test_needs_exactly_one_source(self, runner):
        assert runner.invoke(main, ["validate"]).exit_code == 2
        assert runner.invoke(main, ["validate", "--dihedral", "3", "--trivial", "2"]).exit_code == 2

    def test_text_format(self, runner):
        result = runner.invoke(main, ["validate", "--permutation", "1,0", "--format", "text"])
        assert result.exit_code == 0
        assert "is_rack=True" in result.stdout
        assert "is_spindle=False" in result.stdout

    def test_bad_permutation(self, runner):
        assert runner.invoke(main, ["validate", "--permutation", "1,a"]).exit_code == 2


class TestHomology:
    def test_trivial_quandle(self, runner):
        result = runner.invoke(main, ["homology", "--trivial", "2", "--max-degree", "1"])
        assert result.exit_code == 0, result.output
        groups = json.loads(result.stdout)["groups"]
        assert groups == [{"free_rank": 1, "torsion": []}, {"free_rank": 2, "torsion": []}]

    def test_dihedral3_torsion(self, runner):
        result = runner.invoke(main, ["homology", "--dihedral", "3"])
        assert json.loads(result.stdout)["groups"][3] == {"free_rank": 1, "torsion": [3]}

    def test_cohomology_text(self, runner):
        result = runner.invoke(main, ["cohomology", "--dihedral", "3", "--max-degree", "2", "--format", "text"])
        assert result.exit_code == 0
        assert result.stdout.startswith("cohomology")

    def test_composite_modulus_exits_2(self, runner):
        assert runner.invoke(main, ["homology", "--dihedral", "3", "--mod", "4"]).exit_code == 2

    def test_degree_out_of_range(self, runner):
        assert runner.invoke(main, ["homology", "--dihedral", "3", "--max-degree", "9"]).exit_code == 2

    def test_basis_cap_exits_2(self, runner):
        assert runner.invoke(main, ["homology", "--dihedral", "5", "--max-degree", "5"]).exit_code == 2

    def test_xset_needs_a_file(self, runner):
        assert runner.invoke(main, ["homology", "--dihedral", "3", "--coeff", "xset"]).exit_code == 2

    def test_xset_coefficients(self, runner, tmp_path):
        path = _write(tmp_path / "x.json", {"size": 1, "action": [[0, 0, 0]]})
        result = runner.invoke(main, ["homology", "--dihedral", "3", "--coeff", "xset", "--xset", path, "--max-degree", "1"])
        assert result.exit_code == 0, result.output
        assert json.loads(result.stdout)["coefficients"] == "xset"


class TestCup:
    def test_degree_one_cup(self, runner, tmp_path):
        f = _write(tmp_path / "f.json", {"degree": 1, "values": {"0": 1}})
        g = _write(tmp_path / "g.json", {"degree": 1, "values": {"1": 1}})
        result = runner.invoke(main, ["cup", "--dihedral", "3", "--left", f, "--right", g])
        assert result.exit_code == 0, result.output
        values = json.loads(result.stdout)["result"]["values"]
        # (f⌣g)(x, y) = −f(x)g(y) + f(y)g(x◁y)
        assert values["0,1"] == -1
        assert values["0,2"] == 0
        assert values["1,0"] == 0

    def test_witness(self, runner, tmp_path):
        f = _write(tmp_path / "f.json", {"degree": 1, "values": {"0": 2, "1": 3}})
        result = runner.invoke(main, ["cup", "--dihedral", "3", "--left", f, "--right", f, "--product", "commutativity"])
        assert json.loads(result.stdout)["result"]["values"] == {"0": 4, "1": 9, "2": 0}

    def test_self_coefficients_are_unsupported(self, runner, tmp_path):
        f = _write(tmp_path / "f.json", {"degree": 1, "values": {"0|0": 1}})
        result = runner.invoke(main, ["cup", "--dihedral", "3", "--coeff", "self", "--left", f, "--right", f])
        assert result.exit_code == 1


class TestDecomposeAndVerify:
    def test_decompose(self, runner):
        result = runner.invoke(main, ["decompose", "--dihedral", "3"])
        assert result.exit_code == 0, result.output
        rows = json.loads(result.stdout)["rows"]
        assert rows[3]["quandle"] == "Z/3"
        assert all(r["rack_split"] and r["late_split"] for r in rows)

    def test_decompose_needs_a_spindle(self, runner):
        assert runner.invoke(main, ["decompose", "--permutation", "1,0"]).exit_code == 1

    def test_verify_one_suite(self, runner):
        result = runner.invoke(main, ["verify", "--dihedral", "3", "--suite", "homotopy", "--max-degree", "2"])
        assert result.exit_code == 0, result.output
        (report,) = json.loads(result.stdout)["reports"]
        assert report["suite"] == "homotopy" and report["passed"]

    def test_verify_text(self, runner):
        result = runner.invoke(main, ["verify", "--trivial", "2", "--suite", "complex", "--max-degree", "2", "--format", "text"])
        assert result.exit_code == 0
        assert "complex" in result.stdout

    def test_verify_non_shelf(self, runner, tmp_path):
        path = _write(tmp_path / "bad.json", [[1, 0], [0, 1]])
        assert runner.invoke(main, ["verify", "--shelf", path]).exit_code == 1

    def test_verify_rejects_a_bad_xset(self, runner, tmp_path):
        path = _write(tmp_path / "x.json", {"size": 2, "action": [[0, 1, 0], [1, 0, 1]]})
        result = runner.invoke(main, ["verify", "--dihedral", "3", "--suite", "complex", "--coeff", "xset", "--xset", path])
        assert result.exit_code == 1

    def test_verify_uses_the_xset(self, runner, tmp_path):
        path = _write(tmp_path / "x.json", {"size": 2, "action": [[1, 1, 1], [0, 0, 0]]})
        args = ["verify", "--dihedral", "3", "--suite", "complex", "--max-degree", "2"]
        plain = runner.invoke(main, args)
        result = runner.invoke(main, args + ["--coeff", "xset", "--xset", path])
        assert result.exit_code == 0, result.output
        (report,) = json.loads(result.stdout)["reports"]
        assert report["notes"]["coefficients"] == ["trivial", "self", "xset"]
        assert report["checked"] > json.loads(plain.stdout)["reports"][0]["checked"]

    def test_verify_over_a_field(self, runner):
        result = runner.invoke(main, ["verify", "--dihedral", "3", "--suite", "zinbiel", "--mod", "3"])
        assert result.exit_code == 0, result.output
        payload = json.loads(result.stdout)
        assert payload["modulus"] == 3
        assert list(payload["reports"][0]["notes"]["zinbiel_triples"]) == ["3"]


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert __version__ in result.output
