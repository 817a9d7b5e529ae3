"""Tabular dataset emitters for the benchmark figures.

Each emitter is a pure function of ``(dataset id, scenario)`` producing a
:class:`FigureDataset`: fixed column names with units, finite numeric cells,
and byte-identical CSV/JSON serializations across runs.

* ``fig1`` stack cost trajectories vs deployment, per structure, with the
  learning-rate band and the deployment-bracket cost range
* ``fig2`` capacity and investment required vs stack cost target, per structure
* ``fig3`` stack LCOH contribution vs utilization, per structure
* ``fig4`` regional BoP/EPC costs at the final pathway point, per structure,
  with capacity and learning-rate uncertainty bounds
* ``fig5`` regional combined BoP+EPC LCOH contribution vs utilization
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, replace

from .analysis import capacity_to_target, lcoh_contribution, learning_investment
from .curves import (
    family_cumulative,
    project_cost,
    region_family,
    stack_family,
)
from .types import (
    ComponentStructure,
    CostCategory,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4", "fig5")

_TRAJECTORY_POINTS = 41
_TARGET_POINTS = 26
_UTILIZATION_STEPS = 20


@dataclass(frozen=True)
class FigureDataset:
    """A rectangular, serialization-ready dataset for one figure."""

    dataset_id: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    metadata: dict

    def __post_init__(self):
        width = len(self.columns)
        for row in self.rows:
            if len(row) != width:
                raise ValidationError(
                    f"{self.dataset_id}: row width {len(row)} != {width} columns"
                )
            for column, cell in zip(self.columns, row):
                if isinstance(cell, bool) or (
                    isinstance(cell, (int, float)) and not math.isfinite(cell)
                ):
                    raise ValidationError(
                        f"{self.dataset_id}.{column} = {cell!r} is not a finite number"
                    )

    def to_csv(self) -> str:
        """RFC 4180 text: CRLF line endings, header row, '.' decimals."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\r\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([cell if isinstance(cell, str) else repr(cell) for cell in row])
        return buffer.getvalue()

    def to_json(self) -> str:
        """Equivalent JSON records form (stable key and row order)."""
        return json.dumps(
            {
                "dataset": self.dataset_id,
                "columns": list(self.columns),
                "metadata": self.metadata,
                "rows": [list(row) for row in self.rows],
            },
            indent=2,
        )


def _linspace(start: float, stop: float, count: int) -> list[float]:
    if count < 2 or stop == start:
        return [float(start)]
    span = stop - start
    return [start + span * i / (count - 1) for i in range(count)]


def _band_values(band) -> tuple[float, float, float]:
    return (band.low, band.base, band.high)


def _stack_knots(scenario: Scenario) -> list[tuple[float, dict]]:
    """(total added GW, per-variant cumulative) knots along the pathway."""
    bases = {v: scenario.stack_curves[v].initial_base for v in StackVariant}
    base_total = sum(bases[v] for v in StackVariant)
    knots = [(0.0, bases)]
    for point in scenario.deployment:
        state = {v: point.state.per_variant[v] for v in StackVariant}
        added = sum(state[v] for v in StackVariant) - base_total
        if added == knots[-1][0]:
            knots[-1] = (added, state)
        else:
            knots.append((added, state))
    return knots


def _interp_state(knots: list[tuple[float, dict]], t: float) -> dict:
    if t <= knots[0][0]:
        return knots[0][1]
    for (t0, s0), (t1, s1) in zip(knots, knots[1:]):
        if t <= t1:
            w = (t - t0) / (t1 - t0)
            return {k: s0[k] + w * (s1[k] - s0[k]) for k in s0}
    return knots[-1][1]


def _fig1(scenario: Scenario) -> FigureDataset:
    band = scenario.stack_lr_band
    knots = _stack_knots(scenario)
    total_added = knots[-1][0]
    axis = sorted(set(_linspace(0.0, total_added, _TRAJECTORY_POINTS)) | {t for t, _ in knots})
    states = [(t, _interp_state(knots, t)) for t in axis]
    current = scenario.current_state()
    first, last = scenario.deployment[0].state, scenario.deployment[-1].state
    rows = []
    for structure in StackStructure:
        for variant in StackVariant:
            family = stack_family(structure, variant)
            family_base = family_cumulative(current, family)
            curve = scenario.stack_curves[variant]
            bracket = [
                project_cost(
                    replace(curve, learning_rate=rate),
                    family_base,
                    family_cumulative(state, family),
                )
                for rate in _band_values(band)
                for state in (first, last)
            ]
            lo, hi = min(bracket), max(bracket)
            for t, state in states:
                projected = sum(state[v] for v in StackVariant if v in family)
                costs = [
                    project_cost(replace(curve, learning_rate=rate), family_base, projected)
                    for rate in _band_values(band)
                ]
                rows.append(
                    (
                        structure.value,
                        variant.value,
                        t,
                        projected,
                        costs[0],
                        costs[1],
                        costs[2],
                        lo,
                        hi,
                    )
                )
    return FigureDataset(
        dataset_id="fig1",
        columns=(
            "structure",
            "variant",
            "total_added_gw",
            "family_base_gw",
            "cost_usd_per_kw_lr_low",
            "cost_usd_per_kw_lr_base",
            "cost_usd_per_kw_lr_high",
            "bracket_min_cost_usd_per_kw",
            "bracket_max_cost_usd_per_kw",
        ),
        rows=tuple(rows),
        metadata=_metadata(scenario, "fig1", stack_lr_band=True),
    )


def _fig2(scenario: Scenario) -> FigureDataset:
    subject = StackVariant.WESTERN_PEM
    band = scenario.stack_lr_band
    curve = scenario.stack_curves[subject]
    targets = _linspace(curve.initial_cost, curve.initial_cost / 6.0, _TARGET_POINTS)
    current = scenario.current_state()
    rows = []
    for structure in StackStructure:
        family_base = family_cumulative(current, stack_family(structure, subject))
        anchored = replace(curve, initial_base=family_base)
        for target in targets:
            capacities = [
                capacity_to_target(replace(anchored, learning_rate=rate), target)
                for rate in _band_values(band)
            ]
            investments = [
                learning_investment(
                    replace(anchored, learning_rate=rate), family_base, capacity
                )
                for rate, capacity in zip(_band_values(band), capacities)
            ]
            rows.append((structure.value, target, *capacities, *investments))
    return FigureDataset(
        dataset_id="fig2",
        columns=(
            "structure",
            "target_cost_usd_per_kw",
            "capacity_gw_lr_low",
            "capacity_gw_lr_base",
            "capacity_gw_lr_high",
            "investment_usd_lr_low",
            "investment_usd_lr_base",
            "investment_usd_lr_high",
        ),
        rows=tuple(rows),
        metadata=_metadata(scenario, "fig2", stack_lr_band=True, subject=subject.value),
    )


def _utilization_grid() -> list[float]:
    return [k / _UTILIZATION_STEPS for k in range(1, _UTILIZATION_STEPS + 1)]


def _fig3(scenario: Scenario) -> FigureDataset:
    band = scenario.stack_lr_band
    knots = _stack_knots(scenario)
    entry_added = [
        sum(p.state.per_variant[v] for v in StackVariant)
        - sum(scenario.stack_curves[v].initial_base for v in StackVariant)
        for p in scenario.deployment
    ]
    midpoint = _interp_state(knots, (entry_added[0] + entry_added[-1]) / 2.0)
    current = scenario.current_state()
    rows = []
    for structure in StackStructure:
        for variant in StackVariant:
            family = stack_family(structure, variant)
            family_base = family_cumulative(current, family)
            projected = sum(midpoint[v] for v in StackVariant if v in family)
            curve = scenario.stack_curves[variant]
            capex = [
                project_cost(replace(curve, learning_rate=rate), family_base, projected)
                for rate in _band_values(band)
            ]
            for utilization in _utilization_grid():
                rows.append(
                    (
                        structure.value,
                        variant.value,
                        utilization,
                        *(
                            lcoh_contribution(c, scenario.finance, utilization)
                            for c in capex
                        ),
                    )
                )
    return FigureDataset(
        dataset_id="fig3",
        columns=(
            "structure",
            "variant",
            "utilization",
            "lcoh_usd_per_kg_lr_low",
            "lcoh_usd_per_kg_lr_base",
            "lcoh_usd_per_kg_lr_high",
        ),
        rows=tuple(rows),
        metadata=_metadata(scenario, "fig3", stack_lr_band=True),
    )


def _component_cases(scenario: Scenario):
    """(lr, capacity scale) grid spanning the scenario's uncertainty."""
    factor = scenario.capacity_uncertainty
    scales = sorted({1.0 - factor, 1.0, 1.0 + factor})
    return [(rate, scale) for rate in _band_values(scenario.component_lr_band) for scale in scales]


def _scaled_regions(scenario: Scenario, scale: float) -> dict:
    last = scenario.deployment[-1].state
    return {
        region: scenario.region_base(region)
        + scale * (last.per_region[region] - scenario.region_base(region))
        for region in Region
    }


def _component_cost(scenario, structure, region, category, rate, regions) -> float:
    family = region_family(structure, category, region)
    family_base = sum(scenario.region_base(r) for r in Region if r in family)
    projected = sum(regions[r] for r in Region if r in family)
    curve = replace(scenario.component_curves[(region, category)], learning_rate=rate)
    return project_cost(curve, family_base, projected)


def _fig4(scenario: Scenario) -> FigureDataset:
    base_rate = scenario.component_lr_band.base
    base_regions = _scaled_regions(scenario, 1.0)
    rows = []
    for structure in ComponentStructure:
        for region in Region:
            bop = _component_cost(
                scenario, structure, region, CostCategory.BOP, base_rate, base_regions
            )
            epc = _component_cost(
                scenario, structure, region, CostCategory.EPC, base_rate, base_regions
            )
            combined = [
                _component_cost(scenario, structure, region, CostCategory.BOP, rate, regions)
                + _component_cost(scenario, structure, region, CostCategory.EPC, rate, regions)
                for rate, scale in _component_cases(scenario)
                for regions in (_scaled_regions(scenario, scale),)
            ]
            rows.append(
                (
                    structure.value,
                    region.value,
                    bop,
                    epc,
                    bop + epc,
                    min(combined),
                    max(combined),
                )
            )
    return FigureDataset(
        dataset_id="fig4",
        columns=(
            "structure",
            "region",
            "bop_cost_usd_per_kw",
            "epc_cost_usd_per_kw",
            "combined_cost_usd_per_kw",
            "combined_min_usd_per_kw",
            "combined_max_usd_per_kw",
        ),
        rows=tuple(rows),
        metadata=_metadata(scenario, "fig4", component_lr_band=True, uncertainty=True),
    )


def _fig5(scenario: Scenario) -> FigureDataset:
    base_rate = scenario.component_lr_band.base
    base_regions = _scaled_regions(scenario, 1.0)
    rows = []
    for structure in ComponentStructure:
        for region in Region:
            combined_base = sum(
                _component_cost(scenario, structure, region, category, base_rate, base_regions)
                for category in CostCategory
            )
            combined_all = [
                sum(
                    _component_cost(scenario, structure, region, category, rate, regions)
                    for category in CostCategory
                )
                for rate, scale in _component_cases(scenario)
                for regions in (_scaled_regions(scenario, scale),)
            ]
            lo, hi = min(combined_all), max(combined_all)
            for utilization in _utilization_grid():
                rows.append(
                    (
                        structure.value,
                        region.value,
                        utilization,
                        lcoh_contribution(combined_base, scenario.finance, utilization),
                        lcoh_contribution(lo, scenario.finance, utilization),
                        lcoh_contribution(hi, scenario.finance, utilization),
                    )
                )
    return FigureDataset(
        dataset_id="fig5",
        columns=(
            "structure",
            "region",
            "utilization",
            "lcoh_usd_per_kg",
            "lcoh_min_usd_per_kg",
            "lcoh_max_usd_per_kg",
        ),
        rows=tuple(rows),
        metadata=_metadata(scenario, "fig5", component_lr_band=True, uncertainty=True),
    )


def _metadata(
    scenario: Scenario,
    dataset_id: str,
    *,
    stack_lr_band: bool = False,
    component_lr_band: bool = False,
    uncertainty: bool = False,
    subject: str | None = None,
) -> dict:
    meta = {
        "dataset": dataset_id,
        "scenario": scenario.name,
        "stack_structure": scenario.stack_structure.value,
        "component_structure": scenario.component_structure.value,
        "deployment_labels": [point.label for point in scenario.deployment],
    }
    if stack_lr_band:
        meta["stack_lr_band"] = list(scenario.stack_lr_band)
    if component_lr_band:
        meta["component_lr_band"] = list(scenario.component_lr_band)
    if uncertainty:
        meta["capacity_uncertainty"] = scenario.capacity_uncertainty
    if subject is not None:
        meta["subject"] = subject
    return meta


_EMITTERS = {
    "fig1": _fig1,
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
}


def emit_figure_dataset(dataset_id: str, scenario: Scenario) -> FigureDataset:
    """Emit the named dataset for a scenario; pure and deterministic."""
    if dataset_id not in _EMITTERS:
        known = ", ".join(FIGURE_IDS)
        raise ValidationError(f"unknown figure id {dataset_id!r}; expected one of: {known}")
    return _EMITTERS[dataset_id](scenario)
