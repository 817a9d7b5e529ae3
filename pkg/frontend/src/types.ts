/**
 * Wire types mirroring the scenario schema and API envelopes.
 * The dashboard never recomputes engine numbers; everything rendered comes
 * from these payloads.
 */

export const STACK_VARIANTS = ["western_alk", "chinese_alk", "western_pem", "chinese_pem"] as const;
export const REGIONS = ["us", "eu", "china", "row"] as const;
export const STACK_STRUCTURES = ["shared", "technology_fragmented", "regionally_fragmented"] as const;
export const COMPONENT_STRUCTURES = ["local", "global", "hybrid"] as const;
export const FIGURE_IDS = ["fig1", "fig2", "fig3", "fig4", "fig5"] as const;

export type StackVariant = (typeof STACK_VARIANTS)[number];
export type Region = (typeof REGIONS)[number];
export type StackStructure = (typeof STACK_STRUCTURES)[number];
export type ComponentStructure = (typeof COMPONENT_STRUCTURES)[number];
export type FigureId = (typeof FIGURE_IDS)[number];

export interface LearningRateBandDoc {
  low: number;
  base: number;
  high: number;
}

export interface StackCurveDoc {
  initial_cost_usd_per_kw: number;
  initial_base_gw: number;
  learning_rate: number;
}

export interface CategoryCurveDoc {
  initial_cost_usd_per_kw: number;
  learning_rate: number;
}

export interface RegionCurvesDoc {
  initial_base_gw: number;
  bop: CategoryCurveDoc;
  epc: CategoryCurveDoc;
}

export interface DeploymentPointDoc {
  label: string;
  stacks_gw: Record<StackVariant, number>;
  regions_gw: Record<Region, number>;
}

export interface ScenarioDoc {
  metadata?: Record<string, string>;
  structures: { stack: StackStructure; component: ComponentStructure };
  stacks: {
    learning_rate_band: LearningRateBandDoc;
    curves: Record<StackVariant, StackCurveDoc>;
  };
  components: {
    learning_rate_band: LearningRateBandDoc;
    capacity_uncertainty?: number;
    curves: Record<Region, RegionCurvesDoc>;
  };
  finance: {
    wacc: number;
    lifetime_years: number;
    specific_energy_kwh_per_kg: number;
  };
  deployment: DeploymentPointDoc[];
}

export type Cell = string | number;

export interface DatasetPayload {
  dataset: string;
  columns: string[];
  metadata: Record<string, unknown>;
  rows: Cell[][];
}

export interface ApiEnvelope {
  request_id: string;
  resolved: { scenario: ScenarioDoc; args: Record<string, unknown> };
  result: DatasetPayload;
  warnings: string[];
}

export interface PresetInfo {
  name: string;
  description: string;
  provenance: Record<string, string>;
  scenario: ScenarioDoc;
}
