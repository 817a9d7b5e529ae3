"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or in the
captured output on failure) identifying the criterion, the computed values,
and the tolerance they were held to.
"""

import json
import math
import random
import time
from dataclasses import replace

import numpy as np
import pytest

from learncurve import (
    BOP_EPC_2030,
    STACKS_BENCHMARK,
    ComponentStructure,
    CostCategory,
    DeploymentState,
    ExperienceCurve,
    FinanceParams,
    Region,
    StackStructure,
    StackVariant,
    builtin_presets,
    capacity_to_target,
    component_investment_to_target,
    emit_figure_dataset,
    investment_to_target,
    lcoh_contribution,
    learning_investment,
    load_scenario,
    project_cost,
    project_stack_cost,
)
from learncurve.cli import main as cli_main
from conftest import random_scenario_doc


def _check(name: str, ok: bool, detail: str) -> None:
    print(f"{name} {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{name}: {detail}"


def _within(value: float, anchor: float, rel: float) -> bool:
    return abs(value - anchor) <= rel * abs(anchor)


def test_a1_fragmented_pem_halving():
    started = time.perf_counter()
    scenario = builtin_presets().scenario(STACKS_BENCHMARK)
    result = investment_to_target(
        scenario, StackVariant.WESTERN_PEM, StackStructure.TECHNOLOGY_FRAGMENTED, 300.0
    )
    elapsed = time.perf_counter() - started
    capacity = result.required_family_capacity_gw
    investment = result.required_investment_usd
    ok = (
        _within(capacity, 9.0, 0.10)
        and _within(investment, 3.0e9, 0.10)
        and elapsed < 1.0
    )
    _check(
        "A1",
        ok,
        f"600->300 fragmented: {capacity:.3f} GW (9 GW +/-10%), "
        f"{investment:.4g} USD (3e9 +/-10%), {elapsed * 1000:.0f} ms (<1 s)",
    )


def test_a2_fragmented_pem_deep_target():
    scenario = builtin_presets().scenario(STACKS_BENCHMARK)
    curves = {
        variant: (
            replace(curve, initial_base=0.55)
            if variant.technology == "pem"
            else curve
        )
        for variant, curve in scenario.stack_curves.items()
    }
    scenario = replace(scenario, stack_curves=curves, deployment=scenario.deployment)
    result = investment_to_target(
        scenario, StackVariant.WESTERN_PEM, StackStructure.TECHNOLOGY_FRAGMENTED, 100.0
    )
    capacity = result.required_family_capacity_gw
    investment = result.required_investment_usd
    ok = _within(capacity, 287.0, 0.10) and _within(investment, 41.0e9, 0.10)
    _check(
        "A2",
        ok,
        f"600->100 fragmented from 1.1 GW: {capacity:.1f} GW (287 +/-10%), "
        f"{investment:.4g} USD (41e9 +/-10%)",
    )


def test_a3_shared_deep_target():
    scenario = builtin_presets().scenario(STACKS_BENCHMARK)
    result = investment_to_target(
        scenario, StackVariant.WESTERN_PEM, StackStructure.SHARED, 100.0
    )
    capacity = result.required_family_capacity_gw
    investment = result.required_investment_usd
    ok = _within(capacity, 6180.0, 0.05) and _within(investment, 890.0e9, 0.05)
    _check(
        "A3",
        ok,
        f"600->100 shared from 24 GW: {capacity:.0f} GW (6180 +/-5%), "
        f"{investment:.4g} USD (890e9 +/-5%)",
    )


def test_a4_shared_halving_known_deviation():
    scenario = builtin_presets().scenario(STACKS_BENCHMARK)
    result = investment_to_target(
        scenario, StackVariant.WESTERN_PEM, StackStructure.SHARED, 300.0
    )
    investment = result.required_investment_usd
    # integrating the subject's own curve over the shared family axis gives
    # ~70e9 against the reported ~60e9; the deviation is documented, so the
    # gate asserts both the 20% band and the recorded computed value
    documented = 70204388684.41417
    ok = _within(investment, 60.0e9, 0.20) and _within(investment, documented, 0.01)
    _check(
        "A4",
        ok,
        f"600->300 shared: computed {investment:.4g} USD, recorded deviation vs "
        f"60e9 is {investment / 60.0e9 - 1.0:+.1%} (band +/-20%)",
    )


def test_a5_bop_epc_calibration_pair():
    scenario = builtin_presets().scenario(BOP_EPC_2030)
    local = component_investment_to_target(
        scenario, Region.US, ComponentStructure.LOCAL, 1000.0
    )
    global_ = component_investment_to_target(
        scenario, Region.US, ComponentStructure.GLOBAL, 1000.0
    )
    ok = (
        _within(local.required_family_capacity_gw, 54.0, 0.05)
        and _within(local.required_investment_usd, 64.0e9, 0.05)
        and _within(global_.required_family_capacity_gw, 189.0, 0.05)
        and _within(global_.required_investment_usd, 224.0e9, 0.05)
    )
    _check(
        "A5",
        ok,
        f"US combined to 1000 USD/kW: local {local.required_family_capacity_gw:.1f} GW / "
        f"{local.required_investment_usd:.4g} USD (54 GW, 64e9 +/-5%), "
        f"global {global_.required_family_capacity_gw:.1f} GW / "
        f"{global_.required_investment_usd:.4g} USD (189 GW, 224e9 +/-5%)",
    )


def test_a6_2030_us_gap():
    scenario = builtin_presets().scenario(BOP_EPC_2030)
    at = scenario.deployment[-1].state

    def combined(region, structure):
        from learncurve import project_component_cost

        return sum(
            project_component_cost(scenario, region, category, at, structure)
            for category in CostCategory
        )

    us_gap = combined(Region.US, ComponentStructure.LOCAL) - combined(
        Region.US, ComponentStructure.GLOBAL
    )
    china_gap = combined(Region.CHINA, ComponentStructure.LOCAL) - combined(
        Region.CHINA, ComponentStructure.GLOBAL
    )
    ok = 180.0 <= us_gap <= 250.0 and abs(china_gap) < 10.0
    _check(
        "A6",
        ok,
        f"2030 local-global gap: US {us_gap:.1f} USD/kW (in [180, 250]), "
        f"China {china_gap:.2f} USD/kW (<10)",
    )


def test_a7_lcoh_anchor():
    finance = FinanceParams(wacc=0.076, lifetime_years=10, specific_energy_kwh_per_kg=57.0)
    value = lcoh_contribution(215.0, finance, 0.5)
    ok = abs(value - 0.41) <= 0.01
    _check("A7", ok, f"lcoh(215 USD/kW, 50% utilization) = {value:.4f} USD/kg (0.41 +/-0.01)")


def test_a8_oracle_suites():
    started = time.perf_counter()
    rng = np.random.default_rng(20240810)
    worst = {}

    # (i) closed-form investment vs composite trapezoid quadrature, 1e6 panels
    grid = np.linspace(0.0, 1.0, 1_000_001)
    worst_quad = 0.0
    for _ in range(1000):
        cost = rng.uniform(50.0, 3000.0)
        base = rng.uniform(0.05, 50.0)
        lr = rng.uniform(-0.6, 0.8)
        lo = base * rng.uniform(0.2, 5.0)
        hi = lo * rng.uniform(1.001, 400.0)
        curve = ExperienceCurve(cost, base, lr)
        closed = learning_investment(curve, lo, hi)
        x = lo + (hi - lo) * grid
        exponent = math.log1p(-lr) / math.log(2.0)
        quad = float(np.trapezoid(cost * (x / base) ** exponent, dx=(hi - lo) / 1_000_000) * 1e6)
        worst_quad = max(worst_quad, abs(closed - quad) / abs(closed))
    worst["quadrature"] = (worst_quad, 1e-6)

    # (ii) capacity round-trip through the forward projection
    worst_rt = 0.0
    for _ in range(1000):
        cost = rng.uniform(50.0, 3000.0)
        base = rng.uniform(0.05, 50.0)
        lr = rng.uniform(0.01, 0.6)
        target = cost * rng.uniform(0.01, 1.0)
        curve = ExperienceCurve(cost, base, lr)
        back = project_cost(curve, base, capacity_to_target(curve, target))
        worst_rt = max(worst_rt, abs(back - target) / target)
    worst["round_trip"] = (worst_rt, 1e-9)

    # (iii) doubling law
    worst_double = 0.0
    for _ in range(1000):
        cost = rng.uniform(50.0, 3000.0)
        lr = rng.uniform(-0.9, 0.9)
        base = rng.uniform(0.05, 500.0)
        curve = ExperienceCurve(cost, 1.0, lr)
        doubled = project_cost(curve, base, 2.0 * base)
        expected = (1.0 - lr) * cost
        worst_double = max(worst_double, abs(doubled - expected) / expected)
    worst["doubling"] = (worst_double, 1e-12)

    # (iv) symmetry collapse across the three stack structures
    from conftest import build_scenario

    worst_sym = 0.0
    for _ in range(200):
        base = rng.uniform(0.1, 40.0)
        cost = rng.uniform(50.0, 3000.0)
        lr = rng.uniform(0.01, 0.5)
        added = rng.uniform(0.0, 200.0)
        scenario = build_scenario(
            stack_costs={v: cost for v in StackVariant},
            stack_bases={v: base for v in StackVariant},
            stack_lr=lr,
        )
        at = DeploymentState(per_variant={v: base + added / 4.0 for v in StackVariant})
        values = [
            project_stack_cost(scenario, StackVariant.WESTERN_PEM, at, structure)
            for structure in StackStructure
        ]
        spread = (max(values) - min(values)) / values[0]
        worst_sym = max(worst_sym, spread)
    worst["symmetry"] = (worst_sym, 1e-9)

    # (v) investment additivity
    worst_add = 0.0
    for _ in range(1000):
        cost = rng.uniform(50.0, 3000.0)
        base = rng.uniform(0.1, 50.0)
        lr = rng.uniform(-0.6, 0.8)
        a = rng.uniform(0.5, 20.0)
        b = a * rng.uniform(1.2, 10.0)
        c = b * rng.uniform(1.2, 10.0)
        curve = ExperienceCurve(cost, base, lr)
        total = learning_investment(curve, a, c)
        split = learning_investment(curve, a, b) + learning_investment(curve, b, c)
        worst_add = max(worst_add, abs(split - total) / total)
    worst["additivity"] = (worst_add, 1e-9)

    # (vi) continuity of the log branch at a 50% learning rate
    worst_log = 0.0
    for a, b in ((1.0, 4.0), (0.3, 17.0), (2.0, 2.5), (0.7, 480.0)):
        curve = ExperienceCurve(250.0, 1.0, 0.5)
        at_half = learning_investment(curve, a, b)
        for eps in (-1e-7, 1e-7):
            nearby = learning_investment(replace(curve, learning_rate=0.5 + eps), a, b)
            worst_log = max(worst_log, abs(nearby - at_half) / at_half)
    worst["log_branch"] = (worst_log, 1e-4)

    elapsed = time.perf_counter() - started
    failures = {k: v for k, (v, tol) in worst.items() if v > tol}
    detail = ", ".join(f"{k} {v:.2e} (tol {tol:.0e})" for k, (v, tol) in worst.items())
    ok = not failures and elapsed < 30.0
    _check("A8", ok, f"{detail}; elapsed {elapsed:.1f} s (<30 s)")


def test_a9_interface_parity(tmp_path):
    from fastapi.testclient import TestClient

    from learncurve.service import create_app

    client = TestClient(create_app(builtin_presets()))
    figure_ids = ("fig1", "fig2", "fig3", "fig4", "fig5")
    mismatches = []
    for seed in range(20):
        rng = random.Random(1000 + seed)
        doc = random_scenario_doc(rng)
        figure_id = figure_ids[seed % len(figure_ids)]
        scenario_path = tmp_path / f"scenario_{seed}.json"
        scenario_path.write_text(json.dumps(doc))

        first_csv = tmp_path / f"{seed}_a.csv"
        second_csv = tmp_path / f"{seed}_b.csv"
        for path in (first_csv, second_csv):
            code = cli_main(
                [
                    "figure",
                    "--scenario",
                    str(scenario_path),
                    "--id",
                    figure_id,
                    "--out",
                    str(path),
                ]
            )
            assert code == 0
        if first_csv.read_bytes() != second_csv.read_bytes():
            mismatches.append(f"seed {seed}: CLI bytes differ")

        json_path = tmp_path / f"{seed}.json"
        code = cli_main(
            [
                "figure",
                "--scenario",
                str(scenario_path),
                "--id",
                figure_id,
                "--out",
                str(json_path),
                "--format",
                "json",
            ]
        )
        assert code == 0
        cli_payload = json.loads(json_path.read_text())
        response = client.post("/api/v1/figure", json={"scenario": doc, "id": figure_id})
        assert response.status_code == 200, response.text
        api_payload = response.json()["result"]
        if cli_payload["rows"] != api_payload["rows"]:
            mismatches.append(f"seed {seed}: rows differ")
        if cli_payload["columns"] != api_payload["columns"]:
            mismatches.append(f"seed {seed}: columns differ")

    # the engine must also load what it echoed back
    echoed = response.json()["resolved"]["scenario"]
    load_scenario(json.dumps(echoed))

    ok = not mismatches
    _check(
        "A9",
        ok,
        "20 randomized scenarios: CLI byte-identical across runs and "
        f"CLI/API rows identical ({'; '.join(mismatches) or 'no mismatches'})",
    )
