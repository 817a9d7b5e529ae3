import json
import subprocess
import sys
from pathlib import Path

import pytest

from learncurve import STACKS_BENCHMARK, builtin_presets, scenario_to_doc
from learncurve.cli import main

PRESET = ["--preset", STACKS_BENCHMARK]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, tmp_path, *argv):
    out = tmp_path / "result.json"
    code = main([*argv, "--out", str(out), "--format", "json"])
    assert code == 0, capsys.readouterr().err
    return json.loads(out.read_text())


class TestTarget:
    def test_fragmented_pem_halving(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "target",
            *PRESET,
            "--variant",
            "western_pem",
            "--structure",
            "technology_fragmented",
            "--target-cost",
            "300",
        )
        row = dict(zip(payload["columns"], payload["rows"][0]))
        assert row["required_family_capacity_gw"] == pytest.approx(8.6, abs=0.05)
        assert row["required_investment_usd"] == pytest.approx(2.9e9, rel=0.02)

    def test_table_output(self, capsys):
        code, out, err = run(
            capsys,
            "target",
            *PRESET,
            "--variant",
            "western_pem",
            "--structure",
            "technology_fragmented",
            "--target-cost",
            "300",
        )
        assert code == 0
        assert "required_family_capacity_gw" in out
        assert "8.61161" in out

    def test_region_combined_target(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "target",
            "--preset",
            "paper-bop-epc-2030",
            "--region",
            "us",
            "--structure",
            "local",
            "--target-cost",
            "1000",
        )
        row = dict(zip(payload["columns"], payload["rows"][0]))
        assert row["required_family_capacity_gw"] == pytest.approx(54.0, rel=0.01)


class TestProject:
    def test_shared_at_total_100(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "project",
            *PRESET,
            "--structure",
            "shared",
            "--at-total",
            "100",
        )
        rows = {row[0]: dict(zip(payload["columns"], row)) for row in payload["rows"]}
        assert rows["western_pem"]["cost_usd_per_kw"] == 353.6297313261885

    def test_component_structure_gives_regional_table(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "project",
            "--preset",
            "paper-bop-epc-2030",
            "--structure",
            "local",
        )
        rows = {row[0]: dict(zip(payload["columns"], row)) for row in payload["rows"]}
        assert rows["us"]["combined_cost_usd_per_kw"] == pytest.approx(1288.34, abs=0.01)

    def test_at_file(self, capsys, tmp_path):
        scenario = builtin_presets().scenario(STACKS_BENCHMARK)
        doc = scenario_to_doc(scenario)
        state = {
            "stacks_gw": {k: v + 25.0 for k, v in doc["deployment"][0]["stacks_gw"].items()},
            "regions_gw": doc["deployment"][0]["regions_gw"],
        }
        state_path = tmp_path / "state.json"
        state_path.write_text(json.dumps(state))
        payload = run_json(
            capsys,
            tmp_path,
            "project",
            *PRESET,
            "--structure",
            "shared",
            "--at-file",
            str(state_path),
        )
        assert payload["rows"]

    def test_at_label(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "project",
            *PRESET,
            "--structure",
            "shared",
            "--at-label",
            "added_60gw",
        )
        rows = {row[0]: dict(zip(payload["columns"], row)) for row in payload["rows"]}
        assert rows["western_pem"]["family_projected_gw"] == 84.0

    def test_unknown_label(self, capsys):
        code, out, err = run(
            capsys, "project", *PRESET, "--at-label", "nope"
        )
        assert code == 1
        assert "unknown deployment label" in err


class TestLcoh:
    def test_anchor_value(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "lcoh",
            "--preset",
            "paper-bop-epc-2030",
            "--capex",
            "215",
            "--utilization",
            "0.5",
        )
        row = dict(zip(payload["columns"], payload["rows"][0]))
        assert row["lcoh_usd_per_kg"] == pytest.approx(0.41, abs=0.01)

    def test_finance_overrides(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "lcoh",
            *PRESET,
            "--capex",
            "100",
            "--utilization",
            "0.5",
            "--wacc",
            "0",
            "--lifetime",
            "10",
        )
        row = dict(zip(payload["columns"], payload["rows"][0]))
        assert row["capital_recovery_factor"] == 0.1


class TestSweep:
    def test_axis_and_band(self, capsys, tmp_path):
        payload = run_json(
            capsys,
            tmp_path,
            "sweep",
            *PRESET,
            "--variant",
            "western_pem",
            "--structure",
            "shared",
            "--to",
            "164",
            "--points",
            "3",
        )
        assert payload["rows"][0][0] == 24.0
        assert payload["rows"][-1][0] == 164.0
        assert payload["metadata"]["lr_band"] == [0.15, 0.20, 0.25]

    def test_region_requires_category(self, capsys):
        code, out, err = run(
            capsys, "sweep", *PRESET, "--region", "us", "--to", "10"
        )
        assert code == 1
        assert "category" in err


class TestFigure:
    def test_stdout_csv(self, capsys):
        code, out, err = run(capsys, "figure", *PRESET, "--id", "fig2")
        assert code == 0
        assert out.startswith("structure,target_cost_usd_per_kw")

    def test_byte_identical_outputs(self, tmp_path, capsys):
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        for path in (first, second):
            assert main(["figure", *PRESET, "--id", "fig1", "--out", str(path)]) == 0
        capsys.readouterr()
        assert first.read_bytes() == second.read_bytes()
        assert b"\r\n" in first.read_bytes()

    def test_json_format(self, capsys, tmp_path):
        payload = run_json(capsys, tmp_path, "figure", *PRESET, "--id", "fig3")
        assert payload["dataset"] == "fig3"


class TestPresets:
    def test_listing(self, capsys):
        code, out, err = run(capsys, "presets")
        assert code == 0
        assert "paper-stacks-benchmark" in out
        assert "paper-bop-epc-2030" in out

    def test_json_listing(self, capsys):
        code, out, err = run(capsys, "presets", "--json")
        assert code == 0
        payload = json.loads(out)
        assert "paper-stacks-benchmark" in payload
        assert payload["paper-stacks-benchmark"]["provenance"]

    def test_env_var_extends_catalog(self, capsys, tmp_path, monkeypatch):
        doc = scenario_to_doc(builtin_presets().scenario(STACKS_BENCHMARK))
        doc["metadata"]["name"] = "from-env"
        (tmp_path / "from-env.json").write_text(json.dumps(doc))
        monkeypatch.setenv("LEARNCURVE_PRESET_DIR", str(tmp_path))
        code, out, err = run(capsys, "presets")
        assert code == 0
        assert "from-env" in out


class TestScenarioFiles:
    def test_scenario_file_source(self, capsys, tmp_path):
        doc = scenario_to_doc(builtin_presets().scenario(STACKS_BENCHMARK))
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(doc))
        payload = run_json(
            capsys,
            tmp_path,
            "project",
            "--scenario",
            str(path),
            "--structure",
            "shared",
            "--at-total",
            "100",
        )
        rows = {row[0]: row[-1] for row in payload["rows"]}
        assert rows["western_pem"] == 353.6297313261885

    def test_strict_rejects_unknown_key(self, capsys, tmp_path):
        doc = scenario_to_doc(builtin_presets().scenario(STACKS_BENCHMARK))
        doc["stacks"]["surprise"] = 1
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(doc))
        code, out, err = run(capsys, "project", "--scenario", str(path))
        assert code == 1
        assert "unknown key 'surprise'" in err

    def test_lax_warns_and_succeeds(self, capsys, tmp_path):
        doc = scenario_to_doc(builtin_presets().scenario(STACKS_BENCHMARK))
        doc["stacks"]["surprise"] = 1
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(doc))
        code, out, err = run(capsys, "project", "--scenario", str(path), "--lax")
        assert code == 0
        assert "warning:" in err and "surprise" in err

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "project", "--scenario", "/no/such/file.json")
        assert code == 1
        assert "error:" in err


class TestExitCodes:
    def test_no_subcommand_is_usage_error(self, capsys):
        assert main([]) == 2

    def test_missing_required_flag(self, capsys):
        assert main(["target", *PRESET, "--variant", "western_pem"]) == 2

    def test_both_sources_rejected(self, capsys, tmp_path):
        path = tmp_path / "s.json"
        path.write_text("{}")
        assert (
            main(["project", *PRESET, "--scenario", str(path)]) == 2
        )

    def test_bad_figure_id(self, capsys):
        assert main(["figure", *PRESET, "--id", "fig9"]) == 2

    def test_validation_error_exits_one(self, capsys):
        code, out, err = run(
            capsys,
            "target",
            *PRESET,
            "--variant",
            "western_pem",
            "--structure",
            "technology_fragmented",
            "--target-cost",
            "-5",
        )
        assert code == 1
        assert "target_cost" in err
        assert "Traceback" not in err

    def test_unknown_preset(self, capsys):
        code, out, err = run(capsys, "presets")
        code, out, err = run(
            capsys, "project", "--preset", "bogus", "--structure", "shared"
        )
        assert code == 1
        assert "unknown preset" in err

    @pytest.mark.parametrize(
        "command",
        ["project", "target", "lcoh", "sweep", "figure", "presets", "serve"],
    )
    def test_help_everywhere(self, capsys, command):
        assert main([command, "--help"]) == 0
        out = capsys.readouterr().out
        assert "usage" in out.lower()


class TestSubprocess:
    def test_module_entry_point(self):
        result = subprocess.run(
            [sys.executable, "-m", "learncurve", "presets"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert result.returncode == 0
        assert "paper-stacks-benchmark" in result.stdout

    def test_usage_error_exit_code(self):
        result = subprocess.run(
            [sys.executable, "-m", "learncurve", "figure", "--id", "fig1"],
            capture_output=True,
            text=True,
            timeout=60,
        )
        assert result.returncode == 2
