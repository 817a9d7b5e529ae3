"""One-factor experience-curve projection under alternative learning structures.

Projected cost is ``initial_cost * (X_proj / X_cur) ** log2(1 - LR)`` where
``X`` is the cumulative deployed capacity of the subject's *learning family*:
the set of stack variants (or regions) whose deployment is pooled as the
experience base. The family assignment is the structural assumption; the
arithmetic never changes.
"""

from __future__ import annotations

import math

from .types import (
    ComponentStructure,
    CostCategory,
    DeploymentState,
    DomainError,
    ExperienceCurve,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

_LN2 = math.log(2.0)


def exponent_from_learning_rate(learning_rate: float) -> float:
    """Experience-curve exponent ``log2(1 - learning_rate)``.

    Strictly decreasing in the learning rate: 0 at no learning, -1 when cost
    halves per doubling, positive for cost-increasing (negative) rates.
    Computed in natural logs for deterministic results across platforms.
    """
    if not -1.0 < learning_rate < 1.0:
        raise ValidationError(f"learning_rate = {learning_rate!r} outside (-1, 1)")
    return math.log1p(-learning_rate) / _LN2


def stack_family(structure: StackStructure, variant: StackVariant) -> frozenset[StackVariant]:
    """Variants whose deployment pools into ``variant``'s experience base."""
    if structure is StackStructure.SHARED:
        return frozenset(StackVariant)
    if structure is StackStructure.TECHNOLOGY_FRAGMENTED:
        return frozenset(v for v in StackVariant if v.technology == variant.technology)
    return frozenset({variant})


def region_family(
    structure: ComponentStructure, category: CostCategory, region: Region
) -> frozenset[Region]:
    """Regions whose deployment pools into ``region``'s experience base.

    Hybrid treats BoP learning as global (standardized equipment packages
    travel) and EPC learning as local (project execution does not).
    """
    if structure is ComponentStructure.GLOBAL:
        return frozenset(Region)
    if structure is ComponentStructure.LOCAL:
        return frozenset({region})
    if category is CostCategory.BOP:
        return frozenset(Region)
    return frozenset({region})


def family_cumulative(state: DeploymentState, family) -> float:
    """Cumulative deployed capacity (GW) summed over a learning family.

    ``family`` is a set of stack variants or of regions; summation follows
    the canonical member order so results are bitwise deterministic.
    """
    members = frozenset(family)
    if not members:
        return 0.0
    if all(isinstance(m, StackVariant) for m in members):
        ordered, source, name = StackVariant, state.per_variant, "per_variant"
    elif all(isinstance(m, Region) for m in members):
        ordered, source, name = Region, state.per_region, "per_region"
    else:
        raise ValidationError(
            "family must contain only stack variants or only regions"
        )
    total = 0.0
    for member in ordered:
        if member not in members:
            continue
        if member not in source:
            raise ValidationError(
                f"deployment state has no {name} entry for {member.value}"
            )
        total += source[member]
    return total


def project_cost(
    curve: ExperienceCurve, family_base_current: float, family_base_projected: float
) -> float:
    """Project ``curve.initial_cost`` along the growth of its learning family.

    The ratio of projected to current family base carries all the learning:
    each doubling multiplies cost by exactly ``1 - learning_rate``. The
    curve's own ``initial_base`` is not used here because the relevant base
    is the family aggregate, which the callers compute.
    """
    if not (family_base_current > 0.0) or not math.isfinite(family_base_current):
        raise DomainError(
            f"family_base_current = {family_base_current} must be > 0"
        )
    if family_base_projected < family_base_current:
        raise ValidationError(
            f"family_base_projected = {family_base_projected} below "
            f"family_base_current = {family_base_current}; cumulative capacity "
            "cannot shrink"
        )
    exponent = exponent_from_learning_rate(curve.learning_rate)
    return curve.initial_cost * (family_base_projected / family_base_current) ** exponent


def stack_family_base(
    scenario: Scenario, structure: StackStructure, variant: StackVariant
) -> float:
    """Current experience base (GW) of ``variant``'s family under ``structure``.

    Always recomputed from the partition and the per-variant bases stored in
    the scenario; nothing is cached.
    """
    family = stack_family(structure, variant)
    return family_cumulative(scenario.current_state(), family)


def region_family_base(
    scenario: Scenario,
    structure: ComponentStructure,
    category: CostCategory,
    region: Region,
) -> float:
    """Current experience base (GW) of ``region``'s family under ``structure``."""
    family = region_family(structure, category, region)
    return family_cumulative(scenario.current_state(), family)


def project_stack_cost(
    scenario: Scenario,
    variant: StackVariant,
    at: DeploymentState,
    structure: StackStructure | None = None,
) -> float:
    """Projected stack cost (USD/kW) for ``variant`` at deployment ``at``.

    Uses the variant's own initial cost with its family's cumulative
    deployment under ``structure`` (defaults to the scenario's selection).
    """
    structure = scenario.stack_structure if structure is None else structure
    family = stack_family(structure, variant)
    current = family_cumulative(scenario.current_state(), family)
    projected = family_cumulative(at, family)
    return project_cost(scenario.stack_curves[variant], current, projected)


def project_component_cost(
    scenario: Scenario,
    region: Region,
    category: CostCategory,
    at: DeploymentState,
    structure: ComponentStructure | None = None,
) -> float:
    """Projected BoP or EPC cost (USD/kW) for ``region`` at deployment ``at``."""
    structure = scenario.component_structure if structure is None else structure
    family = region_family(structure, category, region)
    current = family_cumulative(scenario.current_state(), family)
    projected = family_cumulative(at, family)
    return project_cost(scenario.component_curves[(region, category)], current, projected)
