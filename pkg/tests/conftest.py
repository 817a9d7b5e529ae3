import random

import pytest

from learncurve import (
    BOP_EPC_2030,
    STACKS_BENCHMARK,
    DeploymentState,
    ExperienceCurve,
    FinanceParams,
    LearningRateBand,
    PathwayPoint,
    Region,
    Scenario,
    StackVariant,
    CostCategory,
    ComponentStructure,
    StackStructure,
    builtin_presets,
)

VARIANTS = list(StackVariant)
REGIONS = list(Region)


@pytest.fixture(scope="session")
def catalog():
    return builtin_presets()


@pytest.fixture(scope="session")
def stacks_scenario(catalog):
    return catalog.scenario(STACKS_BENCHMARK)


@pytest.fixture(scope="session")
def bop_scenario(catalog):
    return catalog.scenario(BOP_EPC_2030)


def build_scenario(
    stack_costs=None,
    stack_bases=None,
    stack_lr=0.20,
    component_costs=None,
    region_bases=None,
    component_lr=0.10,
    stack_structure=StackStructure.SHARED,
    component_structure=ComponentStructure.LOCAL,
    stack_band=(0.15, 0.20, 0.25),
    component_band=(0.05, 0.10, 0.15),
    finance=None,
    deployment=None,
    capacity_uncertainty=0.5,
    name="synthetic",
):
    """Programmatic scenario for tests; arguments override neutral defaults."""
    stack_costs = stack_costs or {v: 600.0 for v in VARIANTS}
    stack_bases = stack_bases or {v: 6.0 for v in VARIANTS}
    component_costs = component_costs or {
        (r, c): 1000.0 for r in REGIONS for c in CostCategory
    }
    region_bases = region_bases or {r: 0.5 for r in REGIONS}
    stack_curves = {
        v: ExperienceCurve(stack_costs[v], stack_bases[v], stack_lr) for v in VARIANTS
    }
    component_curves = {
        (r, c): ExperienceCurve(component_costs[(r, c)], region_bases[r], component_lr)
        for r in REGIONS
        for c in CostCategory
    }
    if deployment is None:
        deployment = [
            PathwayPoint(
                "end",
                DeploymentState(
                    per_variant={v: stack_bases[v] + 10.0 for v in VARIANTS},
                    per_region={r: region_bases[r] + 10.0 for r in REGIONS},
                ),
            )
        ]
    return Scenario(
        name=name,
        stack_curves=stack_curves,
        component_curves=component_curves,
        stack_structure=stack_structure,
        component_structure=component_structure,
        stack_lr_band=LearningRateBand(*stack_band),
        component_lr_band=LearningRateBand(*component_band),
        finance=finance or FinanceParams(0.076, 10, 57.0),
        deployment=tuple(deployment),
        capacity_uncertainty=capacity_uncertainty,
    )


def random_scenario_doc(rng: random.Random) -> dict:
    """A random but schema-valid scenario document."""
    def band(lo, hi):
        values = sorted(rng.uniform(lo, hi) for _ in range(3))
        return {"low": values[0], "base": values[1], "high": values[2]}

    stack_bases = {v.value: rng.uniform(0.2, 30.0) for v in VARIANTS}
    region_bases = {r.value: rng.uniform(0.05, 5.0) for r in REGIONS}
    entries = []
    added_stacks = {v.value: 0.0 for v in VARIANTS}
    added_regions = {r.value: 0.0 for r in REGIONS}
    for index in range(rng.randint(1, 3)):
        for v in VARIANTS:
            added_stacks[v.value] += rng.uniform(0.0, 40.0)
        for r in REGIONS:
            added_regions[r.value] += rng.uniform(0.0, 40.0)
        entries.append(
            {
                "label": f"step{index}",
                "stacks_gw": {
                    v.value: stack_bases[v.value] + added_stacks[v.value] for v in VARIANTS
                },
                "regions_gw": {
                    r.value: region_bases[r.value] + added_regions[r.value] for r in REGIONS
                },
            }
        )
    return {
        "metadata": {"name": f"random-{rng.randint(0, 10**6)}"},
        "structures": {
            "stack": rng.choice([s.value for s in StackStructure]),
            "component": rng.choice([s.value for s in ComponentStructure]),
        },
        "stacks": {
            "learning_rate_band": band(0.05, 0.4),
            "curves": {
                v.value: {
                    "initial_cost_usd_per_kw": rng.uniform(100.0, 1000.0),
                    "initial_base_gw": stack_bases[v.value],
                    "learning_rate": rng.uniform(0.05, 0.35),
                }
                for v in VARIANTS
            },
        },
        "components": {
            "learning_rate_band": band(0.03, 0.3),
            "capacity_uncertainty": rng.uniform(0.0, 0.9),
            "curves": {
                r.value: {
                    "initial_base_gw": region_bases[r.value],
                    "bop": {
                        "initial_cost_usd_per_kw": rng.uniform(200.0, 3000.0),
                        "learning_rate": rng.uniform(0.03, 0.3),
                    },
                    "epc": {
                        "initial_cost_usd_per_kw": rng.uniform(200.0, 3000.0),
                        "learning_rate": rng.uniform(0.03, 0.3),
                    },
                }
                for r in REGIONS
            },
        },
        "finance": {
            "wacc": rng.uniform(0.0, 0.15),
            "lifetime_years": rng.randint(1, 30),
            "specific_energy_kwh_per_kg": rng.uniform(40.0, 70.0),
        },
        "deployment": entries,
    }
