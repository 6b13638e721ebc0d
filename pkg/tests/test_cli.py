"""Tests for the command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from heapknot import __version__
from heapknot.cli import app

runner = CliRunner()


def load_json(result) -> dict:
    text = result.stdout
    return json.loads(text[text.index("{") :])


def test_version():
    """Test that the version command prints the package version."""
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert f"heapknot version {__version__}" in result.stdout


def test_group_json():
    """Test the group table as JSON."""
    result = runner.invoke(app, ["group", "-g", "D3", "--tsd", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert data["order"] == 6
    assert data["abelian"] is False
    assert data["names"][:3] == ["r0", "r1", "r2"]
    assert data["heap_is_tsd"] is True


def test_group_table_renders():
    """Test the human readable group table."""
    result = runner.invoke(app, ["group", "-g", "Z3"])
    assert result.exit_code == 0
    assert "order 3" in result.stdout


def test_bad_group_is_usage_error():
    """Test that malformed group text exits with a usage error."""
    result = runner.invoke(app, ["group", "-g", "Q8"])
    assert result.exit_code == 2


def test_cohomology_json():
    """Test H²(Z2; Z2) of the full complex."""
    result = runner.invoke(app, ["cohomology", "-g", "Z2", "-c", "Z2", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert data["rank"] == 0
    assert data["torsion"] == [2, 2]
    assert data["variant"] == "full"


def test_cohomology_table():
    """Test the rendered cohomology summary."""
    result = runner.invoke(app, ["cohomology", "-g", "Z2", "-c", "Z2", "--no-basis"])
    assert result.exit_code == 0
    assert "Z_2 ⊕ Z_2" in result.stdout


def test_cocycles_family():
    """Test the φ family over Z3."""
    result = runner.invoke(app, ["cocycles", "-g", "Z3", "--family", "phi", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert [c["label"] for c in data["cocycles"]] == ["phi_1", "phi_2"]
    assert all(c["verified"] for c in data["cocycles"])
    assert data["class_rank"] == 2


def test_cocycles_need_input():
    """Test that cocycles without --cocycle or --family is a usage error."""
    result = runner.invoke(app, ["cocycles", "-g", "Z3"])
    assert result.exit_code == 2


def test_color_trefoil():
    """Test colorings of the trefoil over Z3."""
    result = runner.invoke(app, ["color", "-g", "Z3", "--torus", "3", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert data["count"] == 9
    assert data["tallies"] == {"bi": 6, "mono": 3}
    assert data["colorings"] == []


def test_color_records_from_braid():
    """Test per-coloring records of a framed braid closure."""
    result = runner.invoke(
        app,
        ["color", "-g", "Z2", "-n", "2", "-b", "1 1", "-f", "0 0", "--records", "--json"],
    )
    assert result.exit_code == 0
    data = load_json(result)
    assert data["link"]["braid"] == [1, 1]
    assert len(data["colorings"]) == data["count"]
    assert all(record["wirtinger"] for record in data["colorings"])


def test_color_bad_braid():
    """Test that a malformed braid is a usage error."""
    result = runner.invoke(app, ["color", "-g", "Z2", "-n", "2", "-b", "1 x"])
    assert result.exit_code == 2


def test_invariant_cord():
    """Test Ψ of Ĉ_3 with the ring cocycle over Z3."""
    result = runner.invoke(
        app,
        ["invariant", "-g", "Z3", "-c", "Z3", "--cocycle", "ring:1,0,0", "--cord", "3", "--json"],
    )
    assert result.exit_code == 0
    data = load_json(result)
    assert data["total"] == 9
    assert data["coefficients"] == "Z3"
    assert data["cocycle"] == "ring(1,0,0)"


def test_invariant_renders_panel():
    """Test the rendered invariant."""
    result = runner.invoke(
        app, ["invariant", "-g", "Z2", "--cocycle", "phi:1", "--torus", "4"]
    )
    assert result.exit_code == 0
    assert "Ψ_phi_1" in result.stdout


def test_fundheap_abelianize():
    """Test the reduced heap of T(2,4)."""
    result = runner.invoke(app, ["fundheap", "--torus", "4", "--abelianize", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert len(data["free_generators"]) == 2
    assert data["abelianization"] == "Z_2 ⊕ Z_2"


def test_fundheap_klein_map():
    """Test the Z2 × Z2 map from T(2,4)."""
    result = runner.invoke(
        app,
        [
            "fundheap",
            "--torus",
            "4",
            "--map-to",
            "map:a1=(1,0);a2=(0,1)",
            "-g",
            "Z2xZ2",
            "--json",
        ],
    )
    assert result.exit_code == 0
    hom = load_json(result)["homomorphism"]
    assert hom["holds"] is True
    assert hom["surjective"] is True


def test_fundheap_pretzel_simplified():
    """Test a simplified pretzel presentation keeps its free factor."""
    result = runner.invoke(app, ["fundheap", "--pretzel", "1,1,1", "--simplify", "--json"])
    assert result.exit_code == 0
    assert len(load_json(result)["free_generators"]) == 3


def test_fundheap_map_needs_group():
    """Test a map target without --group fails."""
    result = runner.invoke(app, ["fundheap", "--torus", "4", "--map-to", "map:a1=1"])
    assert result.exit_code == 1


def test_output_file(tmp_path):
    """Test that --output writes the JSON report."""
    path = tmp_path / "reports" / "trefoil.json"
    result = runner.invoke(app, ["color", "-g", "Z3", "--torus", "3", "-o", str(path)])
    assert result.exit_code == 0
    assert "Report saved" in result.stdout
    assert json.loads(path.read_text(encoding="utf-8"))["count"] == 9


def test_config_budget(tmp_path):
    """Test that a settings file reaches the enumeration guard."""
    config = tmp_path / "settings.yaml"
    config.write_text("state_budget: 5\n", encoding="utf-8")
    result = runner.invoke(
        app, ["color", "-g", "Z3", "--torus", "3", "--config", str(config)]
    )
    assert result.exit_code == 1
    assert "budget" in result.stdout


def test_unexpected_error_exits_one(mocker):
    """Test that library failures exit with status 1."""
    mocker.patch("heapknot.cli.second_cohomology", side_effect=RuntimeError("boom"))
    result = runner.invoke(app, ["cohomology", "-g", "Z2"])
    assert result.exit_code == 1
    assert "Error: boom" in result.stdout


def test_reproduce_selected_case():
    """Test a single catalogue case."""
    result = runner.invoke(app, ["reproduce", "--case", "h2-z2-z2", "--json"])
    assert result.exit_code == 0
    data = load_json(result)
    assert data["passed"] == 1
    assert data["failed"] == 0


@pytest.mark.parametrize("json_flag", [[], ["--json"]])
def test_reproduce_failing_catalogue(tmp_path, json_flag):
    """Test that a failing case makes reproduce exit 1."""
    catalogue = tmp_path / "targets.yaml"
    catalogue.write_text(
        "cases:\n"
        "  - {id: wrong, kind: cohomology, params: {group: Z2, coefficients: Z2},"
        " expect: {rank: 3}}\n",
        encoding="utf-8",
    )
    result = runner.invoke(app, ["reproduce", "--catalogue", str(catalogue), *json_flag])
    assert result.exit_code == 1
