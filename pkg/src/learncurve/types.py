"""Domain types for electrolysis learning-curve scenarios.

Everything here is an immutable value validated at construction time; all
operations elsewhere in the package are pure functions of these values, so
any of them can be evaluated concurrently with deterministic results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping


class ValidationError(ValueError):
    """An input violates a documented constraint (range, shape, ordering)."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""


def _parse_token(cls, token, kind: str):
    try:
        return cls(str(token).strip().lower())
    except ValueError:
        valid = ", ".join(m.value for m in cls)
        raise ValidationError(
            f"unknown {kind} {token!r}; expected one of: {valid}"
        ) from None


class StackVariant(str, Enum):
    """Electrolyzer stack variants: two technologies, each split by origin."""

    WESTERN_ALK = "western_alk"
    CHINESE_ALK = "chinese_alk"
    WESTERN_PEM = "western_pem"
    CHINESE_PEM = "chinese_pem"

    @classmethod
    def parse(cls, token: str) -> "StackVariant":
        return _parse_token(cls, token, "stack variant")

    @property
    def technology(self) -> str:
        """Technology family, ``"alk"`` or ``"pem"``."""
        if self in (StackVariant.WESTERN_ALK, StackVariant.CHINESE_ALK):
            return "alk"
        return "pem"


class Region(str, Enum):
    US = "us"
    EU = "eu"
    CHINA = "china"
    ROW = "row"

    @classmethod
    def parse(cls, token: str) -> "Region":
        return _parse_token(cls, token, "region")


class CostCategory(str, Enum):
    """Non-stack capital cost categories of an electrolysis project."""

    BOP = "bop"
    EPC = "epc"

    @classmethod
    def parse(cls, token: str) -> "CostCategory":
        return _parse_token(cls, token, "cost category")


class StackStructure(str, Enum):
    """How experience is pooled across stack variants.

    ``SHARED`` pools all four variants on one curve; ``TECHNOLOGY_FRAGMENTED``
    lets ALK and PEM learn separately; ``REGIONALLY_FRAGMENTED`` gives every
    variant its own curve.
    """

    SHARED = "shared"
    TECHNOLOGY_FRAGMENTED = "technology_fragmented"
    REGIONALLY_FRAGMENTED = "regionally_fragmented"

    @classmethod
    def parse(cls, token: str) -> "StackStructure":
        return _parse_token(cls, token, "stack structure")


class ComponentStructure(str, Enum):
    """How experience is pooled across regions for BoP and EPC costs.

    ``LOCAL`` ties each region to its own deployment, ``GLOBAL`` pools all
    regions, and ``HYBRID`` resolves to global for BoP and local for EPC.
    """

    LOCAL = "local"
    GLOBAL = "global"
    HYBRID = "hybrid"

    @classmethod
    def parse(cls, token: str) -> "ComponentStructure":
        return _parse_token(cls, token, "component structure")


def _require_finite(name: str, value: float) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{name} = {value!r} is not a number")
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} = {value!r} is not finite")
    return value


def _require_positive(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value <= 0.0:
        raise ValidationError(f"{name} = {value} must be > 0")
    return value


def _require_learning_rate(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if not -1.0 < value < 1.0:
        raise ValidationError(f"{name} = {value} outside (-1, 1)")
    return value


@dataclass(frozen=True)
class ExperienceCurve:
    """One-factor experience curve: a cost anchor plus a learning rate.

    ``initial_cost`` is USD/kW at an experience base of ``initial_base`` GW.
    ``learning_rate`` is the fractional cost reduction per doubling of the
    experience base; negative rates model cost escalation and anything at or
    beyond +/-1 is nonphysical.
    """

    initial_cost: float
    initial_base: float
    learning_rate: float

    def __post_init__(self):
        object.__setattr__(
            self, "initial_cost", _require_positive("initial_cost", self.initial_cost)
        )
        object.__setattr__(
            self, "initial_base", _require_positive("initial_base", self.initial_base)
        )
        object.__setattr__(
            self,
            "learning_rate",
            _require_learning_rate("learning_rate", self.learning_rate),
        )


@dataclass(frozen=True)
class LearningRateBand:
    """Low/base/high learning-rate sensitivities, each within (-1, 1)."""

    low: float
    base: float
    high: float

    def __post_init__(self):
        for name in ("low", "base", "high"):
            object.__setattr__(
                self, name, _require_learning_rate(name, getattr(self, name))
            )
        if not (self.low <= self.base <= self.high):
            raise ValidationError(
                "learning_rate_band requires low <= base <= high, got "
                f"({self.low}, {self.base}, {self.high})"
            )

    def __iter__(self):
        return iter((self.low, self.base, self.high))


@dataclass(frozen=True)
class DeploymentState:
    """Cumulative deployed capacity (GW) per stack variant and per region.

    Maps may be partial; operations that need a member raise if it is absent.
    """

    per_variant: Mapping[StackVariant, float] = field(default_factory=dict)
    per_region: Mapping[Region, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "per_variant", _checked_map(self.per_variant, StackVariant, "per_variant")
        )
        object.__setattr__(
            self, "per_region", _checked_map(self.per_region, Region, "per_region")
        )


def _checked_map(mapping, key_cls, name: str) -> dict:
    out = {}
    for key, value in mapping.items():
        key = key if isinstance(key, key_cls) else key_cls.parse(key)
        value = _require_finite(f"{name}.{key.value}", value)
        if value < 0.0:
            raise ValidationError(f"{name}.{key.value} = {value} must be >= 0")
        out[key] = value
    # canonical ordering so that iteration (and summation) is deterministic
    return {key: out[key] for key in key_cls if key in out}


@dataclass(frozen=True)
class FinanceParams:
    """Financing assumptions for converting capex into hydrogen cost.

    ``wacc`` is the weighted average cost of capital (fraction/year),
    ``lifetime_years`` the amortization period, and
    ``specific_energy_kwh_per_kg`` the electricity demand per kg of hydrogen
    used to translate installed kW into annual production.
    """

    wacc: float
    lifetime_years: int
    specific_energy_kwh_per_kg: float

    def __post_init__(self):
        wacc = _require_finite("wacc", self.wacc)
        if wacc < 0.0:
            raise ValidationError(f"wacc = {wacc} must be >= 0")
        object.__setattr__(self, "wacc", wacc)
        if isinstance(self.lifetime_years, bool) or not isinstance(
            self.lifetime_years, int
        ):
            raise ValidationError(
                f"lifetime_years = {self.lifetime_years!r} must be an integer"
            )
        if self.lifetime_years < 1:
            raise ValidationError(
                f"lifetime_years = {self.lifetime_years} must be >= 1"
            )
        object.__setattr__(
            self,
            "specific_energy_kwh_per_kg",
            _require_positive(
                "specific_energy_kwh_per_kg", self.specific_energy_kwh_per_kg
            ),
        )


@dataclass(frozen=True)
class PathwayPoint:
    """A labeled point on a deployment pathway."""

    label: str
    state: DeploymentState

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValidationError(f"pathway label {self.label!r} must be a non-empty string")


@dataclass(frozen=True)
class Scenario:
    """Full parameterization of a learning-structure exercise.

    Holds one experience curve per stack variant, one per (region, cost
    category) pair, the structure selections, learning-rate sensitivity
    bands, financing assumptions, and an ordered deployment pathway whose
    entries are cumulative states (never below the current bases, never
    shrinking).
    """

    name: str
    stack_curves: Mapping[StackVariant, ExperienceCurve]
    component_curves: Mapping[tuple[Region, CostCategory], ExperienceCurve]
    stack_structure: StackStructure
    component_structure: ComponentStructure
    stack_lr_band: LearningRateBand
    component_lr_band: LearningRateBand
    finance: FinanceParams
    deployment: tuple[PathwayPoint, ...]
    capacity_uncertainty: float = 0.5
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        for variant in StackVariant:
            if variant not in self.stack_curves:
                raise ValidationError(f"missing stack curve for {variant.value}")
        for region in Region:
            for category in CostCategory:
                if (region, category) not in self.component_curves:
                    raise ValidationError(
                        f"missing component curve for {region.value}.{category.value}"
                    )
        for region in Region:
            bop = self.component_curves[(region, CostCategory.BOP)].initial_base
            epc = self.component_curves[(region, CostCategory.EPC)].initial_base
            if bop != epc:
                raise ValidationError(
                    f"component curves for {region.value} disagree on initial_base_gw "
                    f"(bop={bop}, epc={epc}); the experience base is regional"
                )
        uncertainty = _require_finite("capacity_uncertainty", self.capacity_uncertainty)
        if not 0.0 <= uncertainty <= 1.0:
            raise ValidationError(
                f"capacity_uncertainty = {uncertainty} outside [0, 1]"
            )
        object.__setattr__(self, "capacity_uncertainty", uncertainty)
        object.__setattr__(self, "deployment", tuple(self.deployment))
        if not self.deployment:
            raise ValidationError("deployment pathway must have at least one entry")
        labels = [point.label for point in self.deployment]
        if len(set(labels)) != len(labels):
            raise ValidationError(f"duplicate deployment labels in {labels}")
        self._check_pathway()

    def _check_pathway(self):
        previous = self.current_state()
        previous_label = "current base"
        for point in self.deployment:
            for variant in StackVariant:
                if variant not in point.state.per_variant:
                    raise ValidationError(
                        f"deployment '{point.label}' is missing stack variant {variant.value}"
                    )
                now = point.state.per_variant[variant]
                before = previous.per_variant[variant]
                if now < before:
                    raise ValidationError(
                        f"deployment '{point.label}'.{variant.value} = {now} below "
                        f"{previous_label} ({before}); cumulative capacity cannot shrink"
                    )
            for region in Region:
                if region not in point.state.per_region:
                    raise ValidationError(
                        f"deployment '{point.label}' is missing region {region.value}"
                    )
                now = point.state.per_region[region]
                before = previous.per_region[region]
                if now < before:
                    raise ValidationError(
                        f"deployment '{point.label}'.{region.value} = {now} below "
                        f"{previous_label} ({before}); cumulative capacity cannot shrink"
                    )
            previous = point.state
            previous_label = f"'{point.label}'"

    def current_state(self) -> DeploymentState:
        """Deployment state at the scenario's stored experience bases."""
        return DeploymentState(
            per_variant={v: self.stack_curves[v].initial_base for v in StackVariant},
            per_region={r: self.region_base(r) for r in Region},
        )

    def region_base(self, region: Region) -> float:
        """Current cumulative electrolysis capacity of a region, GW."""
        return self.component_curves[(region, CostCategory.BOP)].initial_base

    def pathway_point(self, label: str) -> PathwayPoint:
        for point in self.deployment:
            if point.label == label:
                return point
        known = ", ".join(p.label for p in self.deployment)
        raise ValidationError(f"unknown deployment label {label!r}; pathway has: {known}")
