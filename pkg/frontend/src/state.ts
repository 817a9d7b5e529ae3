/**
 * Dashboard scenario state: what the controls edit, client-side validation
 * mirroring the engine's schema constraints, and the translation into an
 * `overrides` object for API requests.
 *
 * The validation mirrors exist so the UI never submits a scenario the
 * server would reject on schema grounds: learning rates strictly inside
 * (-1, 1), band ordering low <= base <= high, positive costs/capacities,
 * utilization in (0, 1].
 */

import type {
  ComponentStructure,
  Region,
  ScenarioDoc,
  StackStructure,
  StackVariant,
} from "./types.js";
import { REGIONS, STACK_VARIANTS } from "./types.js";

export interface BandState {
  low: number;
  base: number;
  high: number;
}

export interface UiScenarioState {
  preset: string;
  stackStructure: StackStructure;
  componentStructure: ComponentStructure;
  stackBand: BandState;
  componentBand: BandState;
  /** Added GW split evenly across the four stack variants. */
  totalAddedGw: number;
  /** Added GW per region, on top of the preset's regional bases. */
  regionAddedGw: Record<Region, number>;
  targetCostUsdPerKw: number;
  utilization: number;
  variant: StackVariant;
  wacc: number;
  lifetimeYears: number;
  specificEnergyKwhPerKg: number;
}

export interface FieldError {
  field: string;
  message: string;
}

export function defaultState(preset: string, doc: ScenarioDoc): UiScenarioState {
  const lastPoint = doc.deployment[doc.deployment.length - 1]!;
  const addedRegions = Object.fromEntries(
    REGIONS.map((region) => [
      region,
      round3(lastPoint.regions_gw[region] - doc.components.curves[region].initial_base_gw),
    ]),
  ) as Record<Region, number>;
  const totalAdded = STACK_VARIANTS.reduce(
    (sum, variant) =>
      sum + lastPoint.stacks_gw[variant] - doc.stacks.curves[variant].initial_base_gw,
    0,
  );
  return {
    preset,
    stackStructure: doc.structures.stack,
    componentStructure: doc.structures.component,
    stackBand: { ...doc.stacks.learning_rate_band },
    componentBand: { ...doc.components.learning_rate_band },
    totalAddedGw: round3(totalAdded),
    regionAddedGw: addedRegions,
    targetCostUsdPerKw: 300,
    utilization: 0.5,
    variant: "western_pem",
    wacc: doc.finance.wacc,
    lifetimeYears: doc.finance.lifetime_years,
    specificEnergyKwhPerKg: doc.finance.specific_energy_kwh_per_kg,
  };
}

function round3(value: number): number {
  return Math.round(value * 1000) / 1000;
}

function checkBand(prefix: string, band: BandState, errors: FieldError[]): void {
  for (const key of ["low", "base", "high"] as const) {
    const value = band[key];
    if (!Number.isFinite(value) || value <= -1 || value >= 1) {
      errors.push({
        field: `${prefix}.${key}`,
        message: `learning rate ${value} must be strictly inside (-1, 1)`,
      });
    }
  }
  if (!(band.low <= band.base && band.base <= band.high)) {
    errors.push({
      field: `${prefix}.base`,
      message: `band must satisfy low <= base <= high, got (${band.low}, ${band.base}, ${band.high})`,
    });
  }
}

export function validateState(state: UiScenarioState): FieldError[] {
  const errors: FieldError[] = [];
  checkBand("stackBand", state.stackBand, errors);
  checkBand("componentBand", state.componentBand, errors);
  if (!Number.isFinite(state.totalAddedGw) || state.totalAddedGw < 0) {
    errors.push({ field: "totalAddedGw", message: "added capacity must be >= 0" });
  }
  for (const region of REGIONS) {
    const value = state.regionAddedGw[region];
    if (!Number.isFinite(value) || value < 0) {
      errors.push({
        field: `regionAddedGw.${region}`,
        message: `added capacity for ${region} must be >= 0`,
      });
    }
  }
  if (!Number.isFinite(state.targetCostUsdPerKw) || state.targetCostUsdPerKw <= 0) {
    errors.push({ field: "targetCostUsdPerKw", message: "target cost must be > 0" });
  }
  if (!Number.isFinite(state.utilization) || state.utilization <= 0 || state.utilization > 1) {
    errors.push({ field: "utilization", message: "utilization must be in (0, 1]" });
  }
  if (!Number.isFinite(state.wacc) || state.wacc < 0) {
    errors.push({ field: "wacc", message: "cost of capital must be >= 0" });
  }
  if (!Number.isInteger(state.lifetimeYears) || state.lifetimeYears < 1) {
    errors.push({ field: "lifetimeYears", message: "lifetime must be an integer >= 1" });
  }
  if (!Number.isFinite(state.specificEnergyKwhPerKg) || state.specificEnergyKwhPerKg <= 0) {
    errors.push({ field: "specificEnergyKwhPerKg", message: "specific energy must be > 0" });
  }
  return errors;
}

/**
 * Overrides for the API: rebuilt deployment pathway (single labeled point
 * from the added-capacity inputs), structure selections, bands (with the
 * curves' base rates kept in sync, the benchmark's uniform-rate
 * convention), and finance.
 */
export function buildOverrides(state: UiScenarioState, doc: ScenarioDoc): Record<string, unknown> {
  const stacksGw = Object.fromEntries(
    STACK_VARIANTS.map((variant) => [
      variant,
      doc.stacks.curves[variant].initial_base_gw + state.totalAddedGw / 4,
    ]),
  );
  const regionsGw = Object.fromEntries(
    REGIONS.map((region) => [
      region,
      doc.components.curves[region].initial_base_gw + state.regionAddedGw[region],
    ]),
  );
  const stackCurves = Object.fromEntries(
    STACK_VARIANTS.map((variant) => [variant, { learning_rate: state.stackBand.base }]),
  );
  const componentCurves = Object.fromEntries(
    REGIONS.map((region) => [
      region,
      {
        bop: { learning_rate: state.componentBand.base },
        epc: { learning_rate: state.componentBand.base },
      },
    ]),
  );
  return {
    structures: { stack: state.stackStructure, component: state.componentStructure },
    stacks: {
      learning_rate_band: { ...state.stackBand },
      curves: stackCurves,
    },
    components: {
      learning_rate_band: { ...state.componentBand },
      curves: componentCurves,
    },
    finance: {
      wacc: state.wacc,
      lifetime_years: state.lifetimeYears,
      specific_energy_kwh_per_kg: state.specificEnergyKwhPerKg,
    },
    deployment: [{ label: "what-if", stacks_gw: stacksGw, regions_gw: regionsGw }],
  };
}
