"""Shared result-table builders behind the CLI and the HTTP API.

Both front ends delegate here, so for identical resolved inputs they produce
numerically identical datasets by construction.
"""

from __future__ import annotations

from .analysis import (
    capital_recovery_factor,
    component_investment_to_target,
    investment_to_target,
    lcoh_contribution,
    subject_family_base,
    sweep_envelope,
)
from .curves import (
    family_cumulative,
    project_component_cost,
    project_stack_cost,
    stack_family,
)
from .figures import FigureDataset
from .scenario_io import parse_deployment_state
from .types import (
    ComponentStructure,
    CostCategory,
    DeploymentState,
    FinanceParams,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

STACK_STRUCTURE_TOKENS = tuple(s.value for s in StackStructure)
COMPONENT_STRUCTURE_TOKENS = tuple(s.value for s in ComponentStructure)


def resolve_structure(token: str | None, scenario: Scenario, domain: str):
    """Map a structure token onto either structure kind.

    ``None`` falls back to the scenario's selection for ``domain`` ("stack"
    or "component").
    """
    if token is None:
        return scenario.stack_structure if domain == "stack" else scenario.component_structure
    if token in STACK_STRUCTURE_TOKENS:
        return StackStructure.parse(token)
    if token in COMPONENT_STRUCTURE_TOKENS:
        return ComponentStructure.parse(token)
    valid = ", ".join(STACK_STRUCTURE_TOKENS + COMPONENT_STRUCTURE_TOKENS)
    raise ValidationError(f"unknown structure {token!r}; expected one of: {valid}")


def resolve_at(
    scenario: Scenario,
    *,
    total_added_gw: float | None = None,
    state_doc: dict | None = None,
    label: str | None = None,
) -> DeploymentState:
    """Resolve the deployment state a projection is evaluated at.

    Exactly one selector may be given; the default is the last pathway
    entry. ``total_added_gw`` follows the benchmark convention of splitting
    added capacity evenly across the four stack variants (and regions).
    """
    given = [x is not None for x in (total_added_gw, state_doc, label)]
    if sum(given) > 1:
        raise ValidationError("give at most one of total added GW, an explicit state, or a label")
    if total_added_gw is not None:
        if total_added_gw < 0:
            raise ValidationError(f"total added GW = {total_added_gw} must be >= 0")
        current = scenario.current_state()
        return DeploymentState(
            per_variant={
                v: current.per_variant[v] + total_added_gw / 4.0 for v in StackVariant
            },
            per_region={
                r: current.per_region[r] + total_added_gw / 4.0 for r in Region
            },
        )
    if state_doc is not None:
        return parse_deployment_state(state_doc)
    if label is not None:
        return scenario.pathway_point(label).state
    return scenario.deployment[-1].state


def project_dataset(scenario: Scenario, structure, at: DeploymentState) -> FigureDataset:
    """Projected costs at ``at``: per variant or per region by structure kind."""
    if isinstance(structure, StackStructure):
        current = scenario.current_state()
        rows = []
        for variant in StackVariant:
            family = stack_family(structure, variant)
            rows.append(
                (
                    variant.value,
                    scenario.stack_curves[variant].initial_cost,
                    family_cumulative(current, family),
                    family_cumulative(at, family),
                    project_stack_cost(scenario, variant, at, structure),
                )
            )
        return FigureDataset(
            dataset_id="project",
            columns=(
                "variant",
                "initial_cost_usd_per_kw",
                "family_base_gw",
                "family_projected_gw",
                "cost_usd_per_kw",
            ),
            rows=tuple(rows),
            metadata={"scenario": scenario.name, "structure": structure.value},
        )
    rows = []
    for region in Region:
        bop = project_component_cost(scenario, region, CostCategory.BOP, at, structure)
        epc = project_component_cost(scenario, region, CostCategory.EPC, at, structure)
        rows.append((region.value, bop, epc, bop + epc))
    return FigureDataset(
        dataset_id="project",
        columns=(
            "region",
            "bop_cost_usd_per_kw",
            "epc_cost_usd_per_kw",
            "combined_cost_usd_per_kw",
        ),
        rows=tuple(rows),
        metadata={"scenario": scenario.name, "structure": structure.value},
    )


def target_dataset(
    scenario: Scenario,
    *,
    target_cost: float,
    variant: str | None = None,
    region: str | None = None,
    category: str | None = None,
    structure: str | None = None,
) -> FigureDataset:
    """Capacity and investment required to reach a cost target."""
    if (variant is None) == (region is None):
        raise ValidationError("give exactly one of a stack variant or a region")
    if variant is not None:
        parsed_variant = StackVariant.parse(variant)
        resolved = resolve_structure(structure, scenario, "stack")
        if not isinstance(resolved, StackStructure):
            raise ValidationError(
                f"a stack variant target needs a stack structure, got {resolved.value!r}"
            )
        result = investment_to_target(scenario, parsed_variant, resolved, target_cost)
        subject = parsed_variant.value
    else:
        parsed_region = Region.parse(region)
        resolved = resolve_structure(structure, scenario, "component")
        if not isinstance(resolved, ComponentStructure):
            raise ValidationError(
                f"a region target needs a component structure, got {resolved.value!r}"
            )
        parsed_category = CostCategory.parse(category) if category else None
        result = component_investment_to_target(
            scenario, parsed_region, resolved, target_cost, parsed_category
        )
        subject = (
            parsed_region.value
            if parsed_category is None
            else f"{parsed_region.value}.{parsed_category.value}"
        )
    return FigureDataset(
        dataset_id="target",
        columns=(
            "subject",
            "structure",
            "target_cost_usd_per_kw",
            "required_family_capacity_gw",
            "required_investment_usd",
        ),
        rows=(
            (
                subject,
                result.structure.value,
                result.target_cost_usd_per_kw,
                result.required_family_capacity_gw,
                result.required_investment_usd,
            ),
        ),
        metadata={"scenario": scenario.name},
    )


def lcoh_dataset(
    scenario: Scenario,
    *,
    capex: float,
    utilization: float,
    wacc: float | None = None,
    lifetime_years: int | None = None,
    specific_energy: float | None = None,
) -> FigureDataset:
    """Capex contribution to levelized hydrogen cost, with finance echo."""
    finance = scenario.finance
    if wacc is not None or lifetime_years is not None or specific_energy is not None:
        finance = FinanceParams(
            wacc=finance.wacc if wacc is None else wacc,
            lifetime_years=(
                finance.lifetime_years if lifetime_years is None else lifetime_years
            ),
            specific_energy_kwh_per_kg=(
                finance.specific_energy_kwh_per_kg
                if specific_energy is None
                else specific_energy
            ),
        )
    value = lcoh_contribution(capex, finance, utilization)
    return FigureDataset(
        dataset_id="lcoh",
        columns=(
            "capex_usd_per_kw",
            "utilization",
            "wacc",
            "lifetime_years",
            "specific_energy_kwh_per_kg",
            "capital_recovery_factor",
            "lcoh_usd_per_kg",
        ),
        rows=(
            (
                float(capex),
                float(utilization),
                finance.wacc,
                float(finance.lifetime_years),
                finance.specific_energy_kwh_per_kg,
                capital_recovery_factor(finance.wacc, finance.lifetime_years),
                value,
            ),
        ),
        metadata={"scenario": scenario.name},
    )


def sweep_dataset(
    scenario: Scenario,
    *,
    to_gw: float,
    points: int = 25,
    from_gw: float | None = None,
    variant: str | None = None,
    region: str | None = None,
    category: str | None = None,
    structure: str | None = None,
) -> FigureDataset:
    """Cost trajectory over a family-deployment axis for the rate band."""
    if (variant is None) == (region is None):
        raise ValidationError("give exactly one of a stack variant or a region")
    if variant is not None:
        subject = StackVariant.parse(variant)
        domain = "stack"
        subject_token = subject.value
    else:
        if not category:
            raise ValidationError("region sweeps need a category (bop or epc)")
        subject = (Region.parse(region), CostCategory.parse(category))
        domain = "component"
        subject_token = f"{subject[0].value}.{subject[1].value}"
    resolved = resolve_structure(structure, scenario, domain)
    if points < 2:
        raise ValidationError(f"points = {points} must be >= 2")
    family_base = subject_family_base(scenario, subject, resolved)
    start = family_base if from_gw is None else from_gw
    axis = [start + (to_gw - start) * i / (points - 1) for i in range(points)]
    envelope = sweep_envelope(scenario, subject, resolved, axis)
    rows = tuple(
        zip(
            envelope.axis_gw,
            envelope.cost_lr_low,
            envelope.cost_lr_base,
            envelope.cost_lr_high,
        )
    )
    return FigureDataset(
        dataset_id="sweep",
        columns=(
            "family_gw",
            "cost_usd_per_kw_lr_low",
            "cost_usd_per_kw_lr_base",
            "cost_usd_per_kw_lr_high",
        ),
        rows=rows,
        metadata={
            "scenario": scenario.name,
            "subject": subject_token,
            "structure": resolved.value,
            "lr_band": list(envelope.lr_band),
            "bracket_min_cost_usd_per_kw": envelope.bracket_min_cost_usd_per_kw,
            "bracket_max_cost_usd_per_kw": envelope.bracket_max_cost_usd_per_kw,
        },
    )
