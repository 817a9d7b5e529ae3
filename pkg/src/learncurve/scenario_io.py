"""Scenario configuration format: strict JSON loading and serialization.

A scenario document is a single JSON object with the top-level keys
``metadata``, ``structures``, ``stacks``, ``components``, ``finance``, and
``deployment``. Keys are lower_snake_case and numeric fields carry their
units in the name. Strict loading rejects unknown keys anywhere outside
``metadata``; lax loading downgrades them to :class:`ScenarioWarning`.
The formal schema ships in ``docs/scenario.schema.json``.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

from .types import (
    ComponentStructure,
    CostCategory,
    DeploymentState,
    ExperienceCurve,
    FinanceParams,
    LearningRateBand,
    PathwayPoint,
    Region,
    Scenario,
    StackStructure,
    StackVariant,
    ValidationError,
)

DEFAULT_CAPACITY_UNCERTAINTY = 0.5


class ScenarioWarning(UserWarning):
    """Non-fatal scenario-document issue (only emitted in lax mode)."""


def _require_object(doc, path: str) -> dict:
    if not isinstance(doc, dict):
        raise ValidationError(f"{path} = {doc!r} must be a JSON object")
    return doc


def _check_keys(doc: dict, path: str, required, optional=(), *, strict=True):
    for key in required:
        if key not in doc:
            raise ValidationError(f"{path}: missing required key '{key}'")
    allowed = set(required) | set(optional)
    for key in doc:
        if key not in allowed:
            message = f"{path}: unknown key '{key}'"
            if strict:
                raise ValidationError(message)
            warnings.warn(f"{message} (ignored)", ScenarioWarning, stacklevel=2)


def _number(doc: dict, path: str, key: str) -> float:
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{path}.{key} = {value!r} is not a number")
    return float(value)


def _positive(doc: dict, path: str, key: str) -> float:
    value = _number(doc, path, key)
    if not value > 0.0:
        raise ValidationError(f"{path}.{key} = {value} must be > 0")
    return value


def _learning_rate(doc: dict, path: str, key: str) -> float:
    value = _number(doc, path, key)
    if not -1.0 < value < 1.0:
        raise ValidationError(f"{path}.{key} = {value} outside (-1, 1)")
    return value


def _band(doc, path: str, *, strict) -> LearningRateBand:
    doc = _require_object(doc, path)
    _check_keys(doc, path, ("low", "base", "high"), strict=strict)
    low = _learning_rate(doc, path, "low")
    base = _learning_rate(doc, path, "base")
    high = _learning_rate(doc, path, "high")
    if not (low <= base <= high):
        raise ValidationError(
            f"{path}: requires low <= base <= high, got ({low}, {base}, {high})"
        )
    return LearningRateBand(low, base, high)


def _stack_curves(doc, path: str, *, strict) -> dict:
    doc = _require_object(doc, path)
    _check_keys(doc, path, tuple(v.value for v in StackVariant), strict=strict)
    curves = {}
    for variant in StackVariant:
        sub = _require_object(doc[variant.value], f"{path}.{variant.value}")
        sub_path = f"{path}.{variant.value}"
        _check_keys(
            sub,
            sub_path,
            ("initial_cost_usd_per_kw", "initial_base_gw", "learning_rate"),
            strict=strict,
        )
        curves[variant] = ExperienceCurve(
            initial_cost=_positive(sub, sub_path, "initial_cost_usd_per_kw"),
            initial_base=_positive(sub, sub_path, "initial_base_gw"),
            learning_rate=_learning_rate(sub, sub_path, "learning_rate"),
        )
    return curves


def _component_curves(doc, path: str, *, strict) -> dict:
    doc = _require_object(doc, path)
    _check_keys(doc, path, tuple(r.value for r in Region), strict=strict)
    curves = {}
    for region in Region:
        sub_path = f"{path}.{region.value}"
        sub = _require_object(doc[region.value], sub_path)
        _check_keys(
            sub, sub_path, ("initial_base_gw", "bop", "epc"), strict=strict
        )
        base = _positive(sub, sub_path, "initial_base_gw")
        for category in CostCategory:
            cat_path = f"{sub_path}.{category.value}"
            cat = _require_object(sub[category.value], cat_path)
            _check_keys(
                cat, cat_path, ("initial_cost_usd_per_kw", "learning_rate"), strict=strict
            )
            curves[(region, category)] = ExperienceCurve(
                initial_cost=_positive(cat, cat_path, "initial_cost_usd_per_kw"),
                initial_base=base,
                learning_rate=_learning_rate(cat, cat_path, "learning_rate"),
            )
    return curves


def _capacity_map(doc, path: str, key_cls, *, strict) -> dict:
    doc = _require_object(doc, path)
    _check_keys(doc, path, tuple(k.value for k in key_cls), strict=strict)
    out = {}
    for key in key_cls:
        value = _number(doc, path, key.value)
        if value < 0.0:
            raise ValidationError(f"{path}.{key.value} = {value} must be >= 0")
        out[key] = value
    return out


def _deployment(doc, path: str, *, strict) -> tuple[PathwayPoint, ...]:
    if not isinstance(doc, list) or not doc:
        raise ValidationError(f"{path} must be a non-empty array of pathway points")
    points = []
    for index, entry in enumerate(doc):
        entry_path = f"{path}[{index}]"
        entry = _require_object(entry, entry_path)
        _check_keys(entry, entry_path, ("label", "stacks_gw", "regions_gw"), strict=strict)
        label = entry["label"]
        if not isinstance(label, str) or not label:
            raise ValidationError(f"{entry_path}.label = {label!r} must be a non-empty string")
        state = DeploymentState(
            per_variant=_capacity_map(
                entry["stacks_gw"], f"{entry_path}.stacks_gw", StackVariant, strict=strict
            ),
            per_region=_capacity_map(
                entry["regions_gw"], f"{entry_path}.regions_gw", Region, strict=strict
            ),
        )
        points.append(PathwayPoint(label=label, state=state))
    return tuple(points)


def parse_deployment_state(
    doc, *, strict: bool = True, path: str = "deployment_state"
) -> DeploymentState:
    """Parse a standalone cumulative deployment state document.

    Expects ``{"stacks_gw": {...}, "regions_gw": {...}}`` with every stack
    variant and region present.
    """
    doc = _require_object(doc, path)
    _check_keys(doc, path, ("stacks_gw", "regions_gw"), strict=strict)
    return DeploymentState(
        per_variant=_capacity_map(doc["stacks_gw"], f"{path}.stacks_gw", StackVariant, strict=strict),
        per_region=_capacity_map(doc["regions_gw"], f"{path}.regions_gw", Region, strict=strict),
    )


def parse_scenario(doc: dict, *, strict: bool = True) -> Scenario:
    """Build a validated :class:`Scenario` from a parsed JSON document.

    Raises :class:`ValidationError` naming the offending field, value, and
    constraint. In lax mode unknown keys become :class:`ScenarioWarning`
    instead of errors.
    """
    doc = _require_object(doc, "scenario")
    _check_keys(
        doc,
        "scenario",
        ("structures", "stacks", "components", "finance", "deployment"),
        optional=("metadata",),
        strict=strict,
    )

    metadata = doc.get("metadata", {})
    metadata = _require_object(metadata, "metadata")
    for key, value in metadata.items():
        if not isinstance(value, str):
            raise ValidationError(f"metadata.{key} = {value!r} must be a string")

    structures = _require_object(doc["structures"], "structures")
    _check_keys(structures, "structures", ("stack", "component"), strict=strict)
    stack_structure = StackStructure.parse(structures["stack"])
    component_structure = ComponentStructure.parse(structures["component"])

    stacks = _require_object(doc["stacks"], "stacks")
    _check_keys(stacks, "stacks", ("learning_rate_band", "curves"), strict=strict)
    stack_band = _band(stacks["learning_rate_band"], "stacks.learning_rate_band", strict=strict)
    stack_curves = _stack_curves(stacks["curves"], "stacks.curves", strict=strict)

    components = _require_object(doc["components"], "components")
    _check_keys(
        components,
        "components",
        ("learning_rate_band", "curves"),
        optional=("capacity_uncertainty",),
        strict=strict,
    )
    component_band = _band(
        components["learning_rate_band"], "components.learning_rate_band", strict=strict
    )
    component_curves = _component_curves(components["curves"], "components.curves", strict=strict)
    if "capacity_uncertainty" in components:
        uncertainty = _number(components, "components", "capacity_uncertainty")
        if not 0.0 <= uncertainty <= 1.0:
            raise ValidationError(
                f"components.capacity_uncertainty = {uncertainty} outside [0, 1]"
            )
    else:
        uncertainty = DEFAULT_CAPACITY_UNCERTAINTY

    finance_doc = _require_object(doc["finance"], "finance")
    _check_keys(
        finance_doc,
        "finance",
        ("wacc", "lifetime_years", "specific_energy_kwh_per_kg"),
        strict=strict,
    )
    wacc = _number(finance_doc, "finance", "wacc")
    if wacc < 0.0:
        raise ValidationError(f"finance.wacc = {wacc} must be >= 0")
    lifetime = finance_doc["lifetime_years"]
    if isinstance(lifetime, bool) or not isinstance(lifetime, int):
        raise ValidationError(f"finance.lifetime_years = {lifetime!r} must be an integer")
    if lifetime < 1:
        raise ValidationError(f"finance.lifetime_years = {lifetime} must be >= 1")
    finance = FinanceParams(
        wacc=wacc,
        lifetime_years=lifetime,
        specific_energy_kwh_per_kg=_positive(
            finance_doc, "finance", "specific_energy_kwh_per_kg"
        ),
    )

    deployment = _deployment(doc["deployment"], "deployment", strict=strict)

    return Scenario(
        name=metadata.get("name", "unnamed"),
        stack_curves=stack_curves,
        component_curves=component_curves,
        stack_structure=stack_structure,
        component_structure=component_structure,
        stack_lr_band=stack_band,
        component_lr_band=component_band,
        finance=finance,
        deployment=deployment,
        capacity_uncertainty=uncertainty,
        metadata=dict(metadata),
    )


def load_scenario(text: str, *, strict: bool = True) -> Scenario:
    """Parse a JSON scenario document from text.

    Malformed JSON raises a :class:`ValidationError` naming the line and
    column; schema violations raise with the field path and constraint.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return parse_scenario(doc, strict=strict)


def read_scenario_file(path: str | Path, *, strict: bool = True) -> Scenario:
    """Load a scenario from a JSON file on disk."""
    return load_scenario(Path(path).read_text(encoding="utf-8"), strict=strict)


def scenario_to_doc(scenario: Scenario) -> dict:
    """Serialize a scenario back to its canonical document form.

    Round-trips: ``parse_scenario(scenario_to_doc(s))`` equals ``s``.
    """
    return {
        "metadata": dict(scenario.metadata) or {"name": scenario.name},
        "structures": {
            "stack": scenario.stack_structure.value,
            "component": scenario.component_structure.value,
        },
        "stacks": {
            "learning_rate_band": {
                "low": scenario.stack_lr_band.low,
                "base": scenario.stack_lr_band.base,
                "high": scenario.stack_lr_band.high,
            },
            "curves": {
                variant.value: {
                    "initial_cost_usd_per_kw": curve.initial_cost,
                    "initial_base_gw": curve.initial_base,
                    "learning_rate": curve.learning_rate,
                }
                for variant, curve in (
                    (v, scenario.stack_curves[v]) for v in StackVariant
                )
            },
        },
        "components": {
            "learning_rate_band": {
                "low": scenario.component_lr_band.low,
                "base": scenario.component_lr_band.base,
                "high": scenario.component_lr_band.high,
            },
            "capacity_uncertainty": scenario.capacity_uncertainty,
            "curves": {
                region.value: {
                    "initial_base_gw": scenario.region_base(region),
                    "bop": {
                        "initial_cost_usd_per_kw": scenario.component_curves[
                            (region, CostCategory.BOP)
                        ].initial_cost,
                        "learning_rate": scenario.component_curves[
                            (region, CostCategory.BOP)
                        ].learning_rate,
                    },
                    "epc": {
                        "initial_cost_usd_per_kw": scenario.component_curves[
                            (region, CostCategory.EPC)
                        ].initial_cost,
                        "learning_rate": scenario.component_curves[
                            (region, CostCategory.EPC)
                        ].learning_rate,
                    },
                }
                for region in Region
            },
        },
        "finance": {
            "wacc": scenario.finance.wacc,
            "lifetime_years": scenario.finance.lifetime_years,
            "specific_energy_kwh_per_kg": scenario.finance.specific_energy_kwh_per_kg,
        },
        "deployment": [
            {
                "label": point.label,
                "stacks_gw": {
                    v.value: point.state.per_variant[v] for v in StackVariant
                },
                "regions_gw": {
                    r.value: point.state.per_region[r] for r in Region
                },
            }
            for point in scenario.deployment
        ],
    }


def scenario_to_json(scenario: Scenario) -> str:
    """Canonical JSON text form of a scenario (stable key order)."""
    return json.dumps(scenario_to_doc(scenario), indent=2)
