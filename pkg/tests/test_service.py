import copy
import json

import pytest
from fastapi.testclient import TestClient

from learncurve import (
    STACKS_BENCHMARK,
    ValidationError,
    builtin_presets,
    emit_figure_dataset,
    parse_scenario,
    scenario_to_doc,
)
from learncurve.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(builtin_presets()))


@pytest.fixture
def scenario_doc():
    return scenario_to_doc(builtin_presets().scenario(STACKS_BENCHMARK))


class TestPresetsEndpoint:
    def test_listing(self, client):
        response = client.get("/api/v1/presets")
        assert response.status_code == 200
        payload = response.json()
        names = [p["name"] for p in payload["presets"]]
        assert "paper-stacks-benchmark" in names
        assert "paper-bop-epc-2030" in names

    def test_provenance_annotations_present(self, client):
        payload = client.get("/api/v1/presets").json()
        for preset in payload["presets"]:
            assert preset["provenance"]
            assert preset["scenario"]["structures"]


class TestTargetEndpoint:
    def test_fragmented_halving(self, client):
        response = client.post(
            "/api/v1/target",
            json={
                "preset": STACKS_BENCHMARK,
                "variant": "western_pem",
                "structure": "technology_fragmented",
                "target_cost_usd_per_kw": 300,
            },
        )
        assert response.status_code == 200
        payload = response.json()
        row = dict(zip(payload["result"]["columns"], payload["result"]["rows"][0]))
        assert row["required_family_capacity_gw"] == pytest.approx(8.6, abs=0.05)
        assert payload["resolved"]["scenario"]["structures"]["stack"] == "shared"
        assert payload["warnings"] == []

    def test_missing_target_cost(self, client):
        response = client.post(
            "/api/v1/target",
            json={"preset": STACKS_BENCHMARK, "variant": "western_pem"},
        )
        assert response.status_code == 422
        assert "target_cost_usd_per_kw" in response.json()["detail"]


class TestValidationParity:
    def test_detail_matches_loader_message(self, client, scenario_doc):
        scenario_doc["stacks"]["curves"]["western_pem"]["learning_rate"] = 1.2
        with pytest.raises(ValidationError) as excinfo:
            parse_scenario(copy.deepcopy(scenario_doc))
        response = client.post(
            "/api/v1/figure", json={"scenario": scenario_doc, "id": "fig1"}
        )
        assert response.status_code == 422
        assert response.json()["detail"] == str(excinfo.value)

    def test_unknown_payload_key(self, client):
        response = client.post(
            "/api/v1/project", json={"preset": STACKS_BENCHMARK, "bogus": 1}
        )
        assert response.status_code == 422
        assert "unknown key 'bogus'" in response.json()["detail"]

    def test_both_sources_rejected(self, client, scenario_doc):
        response = client.post(
            "/api/v1/project",
            json={"preset": STACKS_BENCHMARK, "scenario": scenario_doc},
        )
        assert response.status_code == 422
        assert "exactly one" in response.json()["detail"]

    def test_unknown_figure_id(self, client):
        response = client.post(
            "/api/v1/figure", json={"preset": STACKS_BENCHMARK, "id": "fig9"}
        )
        assert response.status_code == 422
        assert "unknown figure id" in response.json()["detail"]

    def test_non_json_body(self, client):
        response = client.post(
            "/api/v1/project",
            content=b"not json",
            headers={"content-type": "application/json"},
        )
        assert response.status_code == 422

    def test_domain_error_is_422(self, client):
        response = client.post(
            "/api/v1/lcoh",
            json={
                "preset": STACKS_BENCHMARK,
                "capex_usd_per_kw": 100,
                "utilization": 0,
            },
        )
        assert response.status_code == 422
        assert "no hydrogen" in response.json()["detail"]


class TestCliApiEquality:
    @pytest.mark.parametrize("figure_id", ["fig1", "fig2", "fig3", "fig4", "fig5"])
    def test_figure_rows_match_engine(self, client, figure_id):
        preset = "paper-stacks-benchmark" if figure_id in ("fig1", "fig2", "fig3") else "paper-bop-epc-2030"
        scenario = builtin_presets().scenario(preset)
        expected = emit_figure_dataset(figure_id, scenario)
        response = client.post(
            "/api/v1/figure", json={"preset": preset, "id": figure_id}
        )
        payload = response.json()["result"]
        assert payload["columns"] == list(expected.columns)
        assert payload["rows"] == [list(row) for row in expected.rows]


class TestStatelessness:
    def test_permuted_sequences_give_identical_responses(self, client):
        requests = [
            ("/api/v1/target", {
                "preset": STACKS_BENCHMARK,
                "variant": "western_pem",
                "structure": "shared",
                "target_cost_usd_per_kw": 300,
            }),
            ("/api/v1/project", {"preset": STACKS_BENCHMARK, "at_total_added_gw": 100}),
            ("/api/v1/figure", {"preset": "paper-bop-epc-2030", "id": "fig4"}),
            ("/api/v1/lcoh", {
                "preset": "paper-bop-epc-2030",
                "capex_usd_per_kw": 215,
                "utilization": 0.5,
            }),
        ]
        forward = [client.post(url, json=body).json() for url, body in requests]
        backward = [client.post(url, json=body).json() for url, body in reversed(requests)]
        assert forward == list(reversed(backward))

    def test_request_id_is_deterministic(self, client):
        body = {"preset": STACKS_BENCHMARK, "at_total_added_gw": 100}
        first = client.post("/api/v1/project", json=body).json()
        second = client.post("/api/v1/project", json=body).json()
        assert first == second
        assert first["request_id"] == second["request_id"]


class TestResolvedEcho:
    def test_overrides_are_echoed_and_reproducible(self, client):
        body = {
            "preset": STACKS_BENCHMARK,
            "variant": "western_pem",
            "structure": "technology_fragmented",
            "target_cost_usd_per_kw": 300,
            "overrides": {
                "stacks": {"curves": {"western_pem": {"learning_rate": 0.25}}}
            },
        }
        first = client.post("/api/v1/target", json=body).json()
        echoed = first["resolved"]["scenario"]
        assert echoed["stacks"]["curves"]["western_pem"]["learning_rate"] == 0.25
        replay = client.post(
            "/api/v1/target",
            json={
                "scenario": echoed,
                "variant": "western_pem",
                "structure": "technology_fragmented",
                "target_cost_usd_per_kw": 300,
            },
        ).json()
        assert replay["result"] == first["result"]

    def test_lax_mode_reports_warnings(self, client, scenario_doc):
        scenario_doc["stacks"]["mystery"] = 1
        response = client.post(
            "/api/v1/figure",
            json={"scenario": scenario_doc, "id": "fig1", "lax": True},
        )
        assert response.status_code == 200
        warnings = response.json()["warnings"]
        assert any("mystery" in w for w in warnings)

    def test_strict_mode_rejects(self, client, scenario_doc):
        scenario_doc["stacks"]["mystery"] = 1
        response = client.post(
            "/api/v1/figure", json={"scenario": scenario_doc, "id": "fig1"}
        )
        assert response.status_code == 422


class TestSweepAndProject:
    def test_sweep_endpoint(self, client):
        response = client.post(
            "/api/v1/sweep",
            json={
                "preset": STACKS_BENCHMARK,
                "variant": "western_pem",
                "structure": "shared",
                "to_gw": 164,
                "points": 3,
            },
        )
        assert response.status_code == 200
        rows = response.json()["result"]["rows"]
        assert rows[0][0] == 24.0
        assert rows[-1][0] == 164.0

    def test_project_with_explicit_state(self, client, scenario_doc):
        state = {
            "stacks_gw": {
                name: curve["initial_base_gw"] + 25.0
                for name, curve in scenario_doc["stacks"]["curves"].items()
            },
            "regions_gw": {
                name: curve["initial_base_gw"]
                for name, curve in scenario_doc["components"]["curves"].items()
            },
        }
        response = client.post(
            "/api/v1/project",
            json={"preset": STACKS_BENCHMARK, "structure": "shared", "at": state},
        )
        assert response.status_code == 200
        rows = {row[0]: row for row in response.json()["result"]["rows"]}
        assert rows["western_pem"][-1] == pytest.approx(353.6297313261885, rel=1e-12)
