/**
 * The five dashboard panels: pure converters from /figure payloads to
 * chart specs and SVG. Panels only select and arrange API rows; every
 * plotted number came from the engine.
 */

import { groupedBarChart, lineChart } from "./charts.js";
import type { Band, Series } from "./charts.js";
import type { ComponentStructure, DatasetPayload, FigureId, StackStructure, StackVariant } from "./types.js";
import { COMPONENT_STRUCTURES, REGIONS, STACK_VARIANTS } from "./types.js";
import type { UiScenarioState } from "./state.js";

export interface PanelSpec {
  id: string;
  figureId: FigureId;
  title: string;
  subtitle: string;
  render: (dataset: DatasetPayload, state: UiScenarioState) => string;
}

export const VARIANT_COLORS: Record<StackVariant, string> = {
  western_alk: "#1f77b4",
  chinese_alk: "#17becf",
  western_pem: "#d62728",
  chinese_pem: "#ff7f0e",
};

const STRUCTURE_COLORS: Record<string, string> = {
  shared: "#1f77b4",
  technology_fragmented: "#d62728",
  regionally_fragmented: "#2ca02c",
  local: "#d62728",
  global: "#1f77b4",
  hybrid: "#9467bd",
};

function columnIndex(dataset: DatasetPayload, name: string): number {
  const index = dataset.columns.indexOf(name);
  if (index < 0) throw new Error(`dataset ${dataset.dataset} has no column ${name}`);
  return index;
}

function rowsWhere(dataset: DatasetPayload, filters: Record<string, string>): (string | number)[][] {
  const indices = Object.entries(filters).map(
    ([column, value]) => [columnIndex(dataset, column), value] as const,
  );
  return dataset.rows.filter((row) => indices.every(([i, value]) => row[i] === value));
}

/** (x, y) series from fig1 for one structure/variant at a band column. */
export function fig1Series(
  dataset: DatasetPayload,
  structure: StackStructure,
  variant: StackVariant,
  column: "cost_usd_per_kw_lr_low" | "cost_usd_per_kw_lr_base" | "cost_usd_per_kw_lr_high",
): [number, number][] {
  const x = columnIndex(dataset, "total_added_gw");
  const y = columnIndex(dataset, column);
  return rowsWhere(dataset, { structure, variant }).map((row) => [
    row[x] as number,
    row[y] as number,
  ]);
}

function trajectoriesPanel(dataset: DatasetPayload, state: UiScenarioState): string {
  const series: Series[] = [];
  const bands: Band[] = [];
  for (const variant of STACK_VARIANTS) {
    const base = fig1Series(dataset, state.stackStructure, variant, "cost_usd_per_kw_lr_base");
    if (!base.length) continue;
    series.push({ label: variant, color: VARIANT_COLORS[variant], points: base });
    bands.push({
      color: VARIANT_COLORS[variant],
      upper: fig1Series(dataset, state.stackStructure, variant, "cost_usd_per_kw_lr_low"),
      lower: fig1Series(dataset, state.stackStructure, variant, "cost_usd_per_kw_lr_high"),
    });
  }
  return lineChart({
    xLabel: "added global capacity (GW)",
    yLabel: "stack cost (USD/kW)",
    series,
    bands,
  });
}

function targetsPanel(dataset: DatasetPayload, state: UiScenarioState): string {
  const target = columnIndex(dataset, "target_cost_usd_per_kw");
  const investment = columnIndex(dataset, "investment_usd_lr_base");
  const capacity = columnIndex(dataset, "capacity_gw_lr_base");
  const chart = (column: number, yLabel: string) =>
    lineChart({
      xLabel: "cost target (USD/kW)",
      yLabel,
      yLog: true,
      series: (["shared", "technology_fragmented", "regionally_fragmented"] as const).map(
        (structure) => ({
          label: structure,
          color: STRUCTURE_COLORS[structure]!,
          points: rowsWhere(dataset, { structure })
            .map((row) => [row[target] as number, row[column] as number] as [number, number])
            .filter(([, v]) => v > 0)
            .sort((a, b) => a[0] - b[0]),
        }),
      ),
    });
  return (
    `<div class="split"><div>${chart(investment, "investment (USD)")}</div>` +
    `<div>${chart(capacity, "family capacity (GW)")}</div></div>`
  );
}

function lcohPanel(dataset: DatasetPayload, state: UiScenarioState): string {
  const u = columnIndex(dataset, "utilization");
  const base = columnIndex(dataset, "lcoh_usd_per_kg_lr_base");
  const low = columnIndex(dataset, "lcoh_usd_per_kg_lr_low");
  const high = columnIndex(dataset, "lcoh_usd_per_kg_lr_high");
  const series: Series[] = [];
  const bands: Band[] = [];
  for (const variant of STACK_VARIANTS) {
    const rows = rowsWhere(dataset, { structure: state.stackStructure, variant });
    if (!rows.length) continue;
    series.push({
      label: variant,
      color: VARIANT_COLORS[variant],
      points: rows.map((row) => [row[u] as number, row[base] as number]),
    });
    bands.push({
      color: VARIANT_COLORS[variant],
      upper: rows.map((row) => [row[u] as number, row[low] as number]),
      lower: rows.map((row) => [row[u] as number, row[high] as number]),
    });
  }
  return lineChart({
    xLabel: "utilization (capacity factor)",
    yLabel: "stack LCOH contribution (USD/kg)",
    series,
    bands,
  });
}

function regionalBarsPanel(dataset: DatasetPayload): string {
  const combined = columnIndex(dataset, "combined_cost_usd_per_kw");
  const lo = columnIndex(dataset, "combined_min_usd_per_kw");
  const hi = columnIndex(dataset, "combined_max_usd_per_kw");
  const groups = REGIONS.map((region) => ({
    label: region.toUpperCase(),
    bars: COMPONENT_STRUCTURES.map((structure) => {
      const row = rowsWhere(dataset, { structure, region })[0];
      if (!row) throw new Error(`fig4 missing ${structure}/${region}`);
      return {
        label: structure,
        color: STRUCTURE_COLORS[structure]!,
        value: row[combined] as number,
        low: row[lo] as number,
        high: row[hi] as number,
      };
    }),
  }));
  return groupedBarChart(groups, "BoP + EPC cost (USD/kW)");
}

const REGION_COLORS: Record<string, string> = {
  us: "#1f77b4",
  eu: "#2ca02c",
  china: "#d62728",
  row: "#9467bd",
};

function regionalLcohPanel(dataset: DatasetPayload, state: UiScenarioState): string {
  const u = columnIndex(dataset, "utilization");
  const base = columnIndex(dataset, "lcoh_usd_per_kg");
  const lo = columnIndex(dataset, "lcoh_min_usd_per_kg");
  const hi = columnIndex(dataset, "lcoh_max_usd_per_kg");
  const series: Series[] = [];
  const bands: Band[] = [];
  for (const region of REGIONS) {
    const rows = rowsWhere(dataset, { structure: state.componentStructure, region });
    if (!rows.length) continue;
    series.push({
      label: region,
      color: REGION_COLORS[region]!,
      points: rows.map((row) => [row[u] as number, row[base] as number]),
    });
    bands.push({
      color: REGION_COLORS[region]!,
      upper: rows.map((row) => [row[u] as number, row[hi] as number]),
      lower: rows.map((row) => [row[u] as number, row[lo] as number]),
    });
  }
  return lineChart({
    xLabel: "utilization (capacity factor)",
    yLabel: "BoP + EPC LCOH contribution (USD/kg)",
    series,
    bands,
  });
}

/** The five panels, in display order. */
export function views(): PanelSpec[] {
  return [
    {
      id: "panel-trajectories",
      figureId: "fig1",
      title: "Stack cost trajectories",
      subtitle: "selected structure, all variants; shading spans the learning-rate band",
      render: trajectoriesPanel,
    },
    {
      id: "panel-targets",
      figureId: "fig2",
      title: "Reaching cost targets",
      subtitle: "investment and capacity required, per structure (log scale)",
      render: targetsPanel,
    },
    {
      id: "panel-lcoh",
      figureId: "fig3",
      title: "Stack contribution to hydrogen cost",
      subtitle: "selected structure, by utilization",
      render: lcohPanel,
    },
    {
      id: "panel-regional",
      figureId: "fig4",
      title: "Regional BoP + EPC costs",
      subtitle: "whiskers: capacity and learning-rate uncertainty",
      render: (dataset) => regionalBarsPanel(dataset),
    },
    {
      id: "panel-regional-lcoh",
      figureId: "fig5",
      title: "Regional BoP + EPC contribution to hydrogen cost",
      subtitle: "selected component structure, bands span the uncertainty set",
      render: regionalLcohPanel,
    },
  ];
}
