"""Inverse solves, learning-investment integrals, and hydrogen-cost arithmetic.

Two quantities summarize what an experience curve demands of a cost target:
the *learning capacity* (family deployment at which the curve reaches the
target) and the *learning investment* (cumulative capex from integrating the
curve up to that point). Both use closed forms; the quadrature and bisection
equivalents live in the test suite as independent oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .curves import (
    exponent_from_learning_rate,
    family_cumulative,
    project_component_cost,
    project_cost,
    project_stack_cost,
    region_family,
    region_family_base,
    stack_family,
    stack_family_base,
)
from .types import (
    ComponentStructure,
    CostCategory,
    DeploymentState,
    DomainError,
    ExperienceCurve,
    FinanceParams,
    LearningRateBand,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

KW_PER_GW = 1.0e6
HOURS_PER_YEAR = 8760.0


@dataclass(frozen=True)
class TargetResult:
    """Deployment and investment required to reach a cost target."""

    target_cost_usd_per_kw: float
    required_family_capacity_gw: float
    required_investment_usd: float
    structure: StackStructure | ComponentStructure


@dataclass(frozen=True)
class TrajectoryEnvelope:
    """Cost series over a deployment axis, one per learning rate in a band.

    ``cost_lr_low`` is the series generated by the *low* learning rate; for
    axes beyond the current base it lies pointwise above ``cost_lr_high``
    (faster learning means lower cost, not a lower label). The bracket
    fields give the min/max cost over the scenario's deployment range
    across all three rates.
    """

    axis_gw: tuple[float, ...]
    cost_lr_low: tuple[float, ...]
    cost_lr_base: tuple[float, ...]
    cost_lr_high: tuple[float, ...]
    lr_band: LearningRateBand
    bracket_min_cost_usd_per_kw: float | None = None
    bracket_max_cost_usd_per_kw: float | None = None


def capacity_to_target(curve: ExperienceCurve, target_cost: float) -> float:
    """Family deployment (GW) at which ``curve`` reaches ``target_cost``.

    Inverts the experience curve in closed form:
    ``x = initial_base * (target / initial_cost) ** (1 / log2(1 - LR))``.
    Round-trips through the forward projection to ~1e-15 relative.
    """
    if not (target_cost > 0.0) or not math.isfinite(target_cost):
        raise DomainError(f"target_cost = {target_cost} must be > 0")
    if target_cost == curve.initial_cost:
        return curve.initial_base
    if curve.learning_rate == 0.0:
        raise ValidationError(
            f"target_cost = {target_cost} unreachable under zero learning "
            f"(cost stays at {curve.initial_cost})"
        )
    if curve.learning_rate > 0.0 and target_cost > curve.initial_cost:
        raise ValidationError(
            f"target_cost = {target_cost} above initial_cost = {curve.initial_cost}; "
            "costs only fall under positive learning"
        )
    if curve.learning_rate < 0.0 and target_cost < curve.initial_cost:
        raise ValidationError(
            f"target_cost = {target_cost} below initial_cost = {curve.initial_cost}; "
            "costs only rise under negative learning"
        )
    exponent = exponent_from_learning_rate(curve.learning_rate)
    return curve.initial_base * (target_cost / curve.initial_cost) ** (1.0 / exponent)


def learning_investment(
    curve: ExperienceCurve, family_from: float, family_to: float
) -> float:
    """Cumulative capex (USD) from integrating the curve over deployment.

    Integrates ``C(x) = initial_cost * (x / initial_base) ** b`` from
    ``family_from`` to ``family_to`` GW (either bound may sit anywhere on
    the positive axis; the curve stays anchored at its own base point):

    * general case: ``C0 * x0 / (b + 1) * ((to/x0)**(b+1) - (from/x0)**(b+1))``
    * ``b == -1`` (a 50% learning rate): ``C0 * x0 * ln(to / from)``

    The USD/kW x GW product is converted to USD here, and only here, with
    the factor 1e6 kW/GW.
    """
    for name, bound in (("family_from", family_from), ("family_to", family_to)):
        if not (bound > 0.0) or not math.isfinite(bound):
            raise DomainError(f"{name} = {bound} must be > 0")
    if family_to < family_from:
        raise ValidationError(
            f"family_to = {family_to} below family_from = {family_from}; "
            "cumulative capacity cannot shrink"
        )
    exponent = exponent_from_learning_rate(curve.learning_rate)
    c0, x0 = curve.initial_cost, curve.initial_base
    if exponent == -1.0:
        area = c0 * x0 * math.log(family_to / family_from)
    else:
        beta = exponent + 1.0
        area = c0 * x0 / beta * ((family_to / x0) ** beta - (family_from / x0) ** beta)
    return area * KW_PER_GW


def investment_to_target(
    scenario: Scenario,
    variant: StackVariant,
    structure: StackStructure,
    target_cost: float,
) -> TargetResult:
    """Capacity and investment for ``variant`` to reach ``target_cost``.

    The variant's own cost curve is re-anchored at its family's current
    cumulative base under ``structure``, then inverted and integrated over
    the family's deployment axis.
    """
    family_base = stack_family_base(scenario, structure, variant)
    curve = replace(scenario.stack_curves[variant], initial_base=family_base)
    capacity = capacity_to_target(curve, target_cost)
    investment = learning_investment(curve, family_base, capacity)
    return TargetResult(target_cost, capacity, investment, structure)


def component_investment_to_target(
    scenario: Scenario,
    region: Region,
    structure: ComponentStructure,
    target_cost: float,
    category: CostCategory | None = None,
) -> TargetResult:
    """Capacity and investment for a region's component cost target.

    With ``category=None`` the target applies to the combined BoP + EPC
    cost, which is itself a power law only when both categories share a
    learning rate; unequal rates are rejected. Under ``HYBRID`` the two
    categories also pool deployment differently, so combined targets are
    limited to ``LOCAL`` and ``GLOBAL``.
    """
    bop = scenario.component_curves[(region, CostCategory.BOP)]
    epc = scenario.component_curves[(region, CostCategory.EPC)]
    if category is not None:
        curve = scenario.component_curves[(region, category)]
        family_base = region_family_base(scenario, structure, category, region)
    else:
        if bop.learning_rate != epc.learning_rate:
            raise ValidationError(
                f"combined BoP+EPC target for {region.value} needs equal learning "
                f"rates, got bop={bop.learning_rate} and epc={epc.learning_rate}"
            )
        if structure is ComponentStructure.HYBRID:
            raise ValidationError(
                "combined BoP+EPC target is not a single experience curve under "
                "hybrid learning; solve bop and epc separately"
            )
        curve = ExperienceCurve(
            initial_cost=bop.initial_cost + epc.initial_cost,
            initial_base=bop.initial_base,
            learning_rate=bop.learning_rate,
        )
        family_base = region_family_base(
            scenario, structure, CostCategory.BOP, region
        )
    curve = replace(curve, initial_base=family_base)
    capacity = capacity_to_target(curve, target_cost)
    investment = learning_investment(curve, family_base, capacity)
    return TargetResult(target_cost, capacity, investment, structure)


def capital_recovery_factor(wacc: float, lifetime_years: int) -> float:
    """Annuity factor converting capex into equal annual payments.

    ``wacc * (1+wacc)**n / ((1+wacc)**n - 1)``, with the zero-rate limit
    ``1/n`` handled explicitly.
    """
    if isinstance(lifetime_years, bool) or not isinstance(lifetime_years, int):
        raise ValidationError(f"lifetime_years = {lifetime_years!r} must be an integer")
    if lifetime_years < 1:
        raise ValidationError(f"lifetime_years = {lifetime_years} must be >= 1")
    if not (wacc >= 0.0) or not math.isfinite(wacc):
        raise ValidationError(f"wacc = {wacc} must be >= 0")
    if wacc == 0.0:
        return 1.0 / lifetime_years
    growth = (1.0 + wacc) ** lifetime_years
    return wacc * growth / (growth - 1.0)


def lcoh_contribution(
    capex_usd_per_kw: float, finance: FinanceParams, utilization: float
) -> float:
    """Contribution of a capex block to levelized hydrogen cost, USD/kg.

    Annualizes capex with the capital recovery factor and divides by annual
    hydrogen output per kW, ``8760 * utilization / specific_energy``. Linear
    in capex and strictly decreasing in utilization; electricity cost is
    deliberately not included.
    """
    if utilization == 0.0:
        raise DomainError("utilization = 0 produces no hydrogen")
    if not (0.0 < utilization <= 1.0):
        raise ValidationError(f"utilization = {utilization} outside (0, 1]")
    if not (capex_usd_per_kw >= 0.0) or not math.isfinite(capex_usd_per_kw):
        raise ValidationError(f"capex_usd_per_kw = {capex_usd_per_kw} must be >= 0")
    crf = capital_recovery_factor(finance.wacc, finance.lifetime_years)
    annual_kg_per_kw = HOURS_PER_YEAR * utilization / finance.specific_energy_kwh_per_kg
    return crf * capex_usd_per_kw / annual_kg_per_kw


def subject_family_base(scenario: Scenario, subject, structure) -> float:
    """Current family base (GW) for a variant or (region, category) subject."""
    _, base, _ = _resolve_subject(scenario, subject, structure)
    return base


def _resolve_subject(scenario: Scenario, subject, structure):
    """Return (curve, family_base, default_band) for a sweep subject."""
    if isinstance(subject, StackVariant):
        if not isinstance(structure, StackStructure):
            raise ValidationError(
                f"stack variant {subject.value} needs a stack structure, got {structure!r}"
            )
        curve = scenario.stack_curves[subject]
        base = stack_family_base(scenario, structure, subject)
        return curve, base, scenario.stack_lr_band
    try:
        region, category = subject
    except (TypeError, ValueError):
        raise ValidationError(
            f"subject must be a stack variant or a (region, category) pair, got {subject!r}"
        ) from None
    if not isinstance(structure, ComponentStructure):
        raise ValidationError(
            f"component subject {region.value}.{category.value} needs a component "
            f"structure, got {structure!r}"
        )
    curve = scenario.component_curves[(region, category)]
    base = region_family_base(scenario, structure, category, region)
    return curve, base, scenario.component_lr_band


def _family_at_pathway(scenario: Scenario, subject, structure) -> list[float]:
    """Family cumulative capacity at each pathway entry, in order."""
    if isinstance(subject, StackVariant):
        family = stack_family(structure, subject)
    else:
        region, category = subject
        family = region_family(structure, category, region)
    return [family_cumulative(point.state, family) for point in scenario.deployment]


def sweep_envelope(
    scenario: Scenario,
    subject,
    structure,
    deployment_axis,
    lr_band: LearningRateBand | None = None,
) -> TrajectoryEnvelope:
    """Cost trajectories over a family-deployment axis for a rate band.

    ``subject`` is a stack variant or a (region, category) pair; the axis is
    the family's cumulative capacity in GW, strictly increasing and starting
    at or above the current family base. Each learning rate in the band
    produces one series; the envelope also reports the cost bracket over the
    scenario's own deployment pathway.
    """
    curve, family_base, default_band = _resolve_subject(scenario, subject, structure)
    band = default_band if lr_band is None else lr_band
    axis = [float(x) for x in deployment_axis]
    if not axis:
        raise ValidationError("deployment_axis must not be empty")
    if any(b <= a for a, b in zip(axis, axis[1:])):
        raise ValidationError(f"deployment_axis must be strictly increasing, got {axis}")
    if axis[0] < family_base:
        raise ValidationError(
            f"deployment_axis starts at {axis[0]} below the current family base "
            f"{family_base}"
        )

    def series(rate: float) -> tuple[float, ...]:
        rated = replace(curve, learning_rate=rate)
        return tuple(project_cost(rated, family_base, x) for x in axis)

    pathway = _family_at_pathway(scenario, subject, structure)
    bracket_points = (pathway[0], pathway[-1])
    bracket_costs = [
        project_cost(replace(curve, learning_rate=rate), family_base, x)
        for rate in band
        for x in bracket_points
    ]
    return TrajectoryEnvelope(
        axis_gw=tuple(axis),
        cost_lr_low=series(band.low),
        cost_lr_base=series(band.base),
        cost_lr_high=series(band.high),
        lr_band=band,
        bracket_min_cost_usd_per_kw=min(bracket_costs),
        bracket_max_cost_usd_per_kw=max(bracket_costs),
    )


@dataclass(frozen=True)
class SubjectSpread:
    """Projected cost of one subject under every applicable structure."""

    costs_usd_per_kw: dict[str, float]
    spread_usd_per_kw: float
    lcoh_usd_per_kg: dict[str, float] | None = None
    lcoh_spread_usd_per_kg: float | None = None


@dataclass(frozen=True)
class StructureDeltaResult:
    """Cost differences across learning structures at one deployment state."""

    stacks: dict[StackVariant, SubjectSpread]
    components: dict[tuple[Region, CostCategory], SubjectSpread]
    combined: dict[Region, SubjectSpread]


def _spread(costs: dict[str, float], finance, utilization) -> SubjectSpread:
    spread = max(costs.values()) - min(costs.values())
    if utilization is None:
        return SubjectSpread(costs, spread)
    lcoh = {
        token: lcoh_contribution(cost, finance, utilization)
        for token, cost in costs.items()
    }
    return SubjectSpread(costs, spread, lcoh, max(lcoh.values()) - min(lcoh.values()))


def structure_delta(
    scenario: Scenario, at: DeploymentState, utilization: float | None = None
) -> StructureDeltaResult:
    """Evaluate every subject under every structure and report the spreads.

    For each stack variant, costs under all three stack structures; for each
    (region, category) and for each region's combined BoP+EPC, costs under
    all three component structures. Passing ``utilization`` additionally
    maps every cost through ``lcoh_contribution``.
    """
    stacks = {}
    for variant in StackVariant:
        costs = {
            structure.value: project_stack_cost(scenario, variant, at, structure)
            for structure in StackStructure
        }
        stacks[variant] = _spread(costs, scenario.finance, utilization)
    components = {}
    combined = {}
    for region in Region:
        per_structure_sum = {}
        for category in CostCategory:
            costs = {
                structure.value: project_component_cost(
                    scenario, region, category, at, structure
                )
                for structure in ComponentStructure
            }
            components[(region, category)] = _spread(costs, scenario.finance, utilization)
            for token, cost in costs.items():
                per_structure_sum[token] = per_structure_sum.get(token, 0.0) + cost
        combined[region] = _spread(per_structure_sum, scenario.finance, utilization)
    return StructureDeltaResult(stacks, components, combined)
