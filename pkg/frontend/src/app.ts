/**
 * DOM wiring: controls -> state -> API requests -> panels.
 *
 * Flow per change: update state, run the client-side validation mirrors
 * (never submitting a scenario the engine would reject on schema grounds),
 * encode the state into the URL fragment, then request the five figure
 * datasets plus the target/LCOH readouts. Stale responses are discarded by
 * the API client; 422 details render inline next to the offending control.
 */

import { ApiClient, ApiError } from "./api.js";
import { datasetToCsv } from "./csv.js";
import { controlForError, controlForField } from "./errors.js";
import { display } from "./format.js";
import { views } from "./panels.js";
import type { PanelSpec } from "./panels.js";
import { buildOverrides, defaultState, validateState } from "./state.js";
import type { UiScenarioState } from "./state.js";
import { decodeState, encodeState } from "./url.js";
import type { ApiEnvelope, PresetInfo, ScenarioDoc } from "./types.js";
import {
  COMPONENT_STRUCTURES,
  REGIONS,
  STACK_STRUCTURES,
  STACK_VARIANTS,
} from "./types.js";

const api = new ApiClient();
const panels: PanelSpec[] = views();

let presets: PresetInfo[] = [];
let state: UiScenarioState;
let lastEnvelope: ApiEnvelope | null = null;
const latestDatasets = new Map<string, ApiEnvelope>();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function presetDoc(): ScenarioDoc {
  const preset = presets.find((p) => p.name === state.preset) ?? presets[0]!;
  return preset.scenario;
}

function scenarioBody(): Record<string, unknown> {
  return { preset: state.preset, overrides: buildOverrides(state, presetDoc()) };
}

function clearErrors(): void {
  document.querySelectorAll(".field-error").forEach((node) => {
    node.textContent = "";
  });
  el("control-banner").textContent = "";
}

function showError(controlId: string | null, message: string): void {
  const target = controlId ? document.querySelector(`#${controlId} .field-error`) : null;
  if (target) {
    target.textContent = message;
  } else {
    el("control-banner").textContent = message;
  }
}

function renderPanels(): void {
  for (const panel of panels) {
    const envelope = latestDatasets.get(panel.figureId);
    if (!envelope) continue;
    el(`${panel.id}-chart`).innerHTML = panel.render(envelope.result, state);
  }
}

function downloadCsv(panel: PanelSpec): void {
  const envelope = latestDatasets.get(panel.figureId);
  if (!envelope) return;
  const blob = new Blob([datasetToCsv(envelope.result)], { type: "text/csv" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `${panel.figureId}.csv`;
  link.click();
  URL.revokeObjectURL(link.href);
}

function renderResolved(): void {
  if (!lastEnvelope) return;
  el("resolved-json").textContent = JSON.stringify(lastEnvelope.resolved.scenario, null, 2);
  el("request-id").textContent = lastEnvelope.request_id;
  const warnings = lastEnvelope.warnings;
  el("warnings").textContent = warnings.length ? `warnings: ${warnings.join("; ")}` : "";
}

async function refresh(): Promise<void> {
  clearErrors();
  const fieldErrors = validateState(state);
  if (fieldErrors.length) {
    for (const error of fieldErrors) {
      showError(controlForField(error.field), error.message);
    }
    return; // never submit an invalid scenario
  }
  window.history.replaceState(null, "", `#${encodeState(state)}`);
  const body = scenarioBody();

  await Promise.all([
    ...panels.map(async (panel) => {
      try {
        const envelope = await api.figure(panel.figureId, body);
        if (!envelope) return; // superseded by a newer request
        latestDatasets.set(panel.figureId, envelope);
        lastEnvelope = envelope;
        el(`${panel.id}-chart`).innerHTML = panel.render(envelope.result, state);
      } catch (error) {
        if (error instanceof ApiError) {
          showError(controlForError(error.message), error.message);
        } else {
          showError(null, String(error));
        }
      }
    }),
    refreshReadouts(body),
  ]);
  renderResolved();
}

async function refreshReadouts(body: Record<string, unknown>): Promise<void> {
  try {
    const target = await api.target({
      ...body,
      variant: state.variant,
      structure: state.stackStructure,
      target_cost_usd_per_kw: state.targetCostUsdPerKw,
    });
    if (target) {
      const row = Object.fromEntries(
        target.result.columns.map((c, i) => [c, target.result.rows[0]![i]]),
      );
      el("readout-target").textContent =
        `${state.variant} to ${state.targetCostUsdPerKw} USD/kW under ${state.stackStructure}: ` +
        `${display(row["required_family_capacity_gw"] as number)} GW of family deployment, ` +
        `${display((row["required_investment_usd"] as number) / 1e9)} B USD of investment`;
    }
  } catch (error) {
    if (error instanceof ApiError) showError(controlForError(error.message), error.message);
  }
  try {
    const projected = await api.project({ ...body, structure: state.stackStructure });
    const columns = projected.result.columns;
    const costIndex = columns.indexOf("cost_usd_per_kw");
    const row = projected.result.rows.find((r) => r[0] === state.variant);
    if (row) {
      const capex = row[costIndex] as number;
      const lcoh = await api.lcoh({
        ...body,
        capex_usd_per_kw: capex,
        utilization: state.utilization,
      });
      if (lcoh) {
        const lcohRow = Object.fromEntries(
          lcoh.result.columns.map((c, i) => [c, lcoh.result.rows[0]![i]]),
        );
        el("readout-lcoh").textContent =
          `${state.variant} at the what-if deployment: ${display(capex)} USD/kW; ` +
          `stack LCOH contribution at ${Math.round(state.utilization * 100)}% utilization: ` +
          `${display(lcohRow["lcoh_usd_per_kg"] as number)} USD/kg`;
      }
    }
  } catch (error) {
    if (error instanceof ApiError) showError(controlForError(error.message), error.message);
  }
}

function bindNumber(id: string, get: () => number, set: (value: number) => void): void {
  const input = el<HTMLInputElement>(id);
  input.value = String(get());
  input.addEventListener("change", () => {
    set(Number(input.value));
    void refresh();
  });
}

function bindSelect(id: string, options: readonly string[], get: () => string, set: (value: string) => void): void {
  const select = el<HTMLSelectElement>(id);
  select.innerHTML = options
    .map((option) => `<option value="${option}">${option.replace(/_/g, " ")}</option>`)
    .join("");
  select.value = get();
  select.addEventListener("change", () => {
    set(select.value);
    void refresh();
  });
}

function syncControls(): void {
  el<HTMLSelectElement>("input-preset").value = state.preset;
  el<HTMLSelectElement>("input-stack-structure").value = state.stackStructure;
  el<HTMLSelectElement>("input-component-structure").value = state.componentStructure;
  el<HTMLSelectElement>("input-variant").value = state.variant;
  const numbers: [string, number][] = [
    ["input-stack-low", state.stackBand.low],
    ["input-stack-base", state.stackBand.base],
    ["input-stack-high", state.stackBand.high],
    ["input-comp-low", state.componentBand.low],
    ["input-comp-base", state.componentBand.base],
    ["input-comp-high", state.componentBand.high],
    ["input-added", state.totalAddedGw],
    ["input-target", state.targetCostUsdPerKw],
    ["input-utilization", state.utilization],
    ["input-wacc", state.wacc],
    ["input-lifetime", state.lifetimeYears],
    ["input-sec", state.specificEnergyKwhPerKg],
  ];
  for (const [id, value] of numbers) {
    el<HTMLInputElement>(id).value = String(value);
  }
  for (const region of REGIONS) {
    el<HTMLInputElement>(`input-add-${region}`).value = String(state.regionAddedGw[region]);
  }
}

function buildPanels(): void {
  const host = el("panels");
  host.innerHTML = panels
    .map(
      (panel) => `
      <section class="panel" id="${panel.id}">
        <header>
          <h2>${panel.title}</h2>
          <p>${panel.subtitle}</p>
          <button type="button" id="${panel.id}-download">Download CSV</button>
        </header>
        <div class="chart-host" id="${panel.id}-chart"><p class="loading">loading…</p></div>
      </section>`,
    )
    .join("");
  for (const panel of panels) {
    el(`${panel.id}-download`).addEventListener("click", () => downloadCsv(panel));
  }
}

export async function boot(): Promise<void> {
  presets = await api.presets();
  const first = presets[0]!;
  const fallback = defaultState(first.name, first.scenario);
  state = decodeState(window.location.hash, fallback);
  if (!presets.some((p) => p.name === state.preset)) {
    state.preset = first.name;
  }

  bindSelect("input-preset", presets.map((p) => p.name), () => state.preset, (value) => {
    state = defaultState(value, presets.find((p) => p.name === value)!.scenario);
    syncControls();
  });
  bindSelect("input-stack-structure", STACK_STRUCTURES, () => state.stackStructure, (v) => {
    state.stackStructure = v as UiScenarioState["stackStructure"];
  });
  bindSelect(
    "input-component-structure",
    COMPONENT_STRUCTURES,
    () => state.componentStructure,
    (v) => {
      state.componentStructure = v as UiScenarioState["componentStructure"];
    },
  );
  bindSelect("input-variant", STACK_VARIANTS, () => state.variant, (v) => {
    state.variant = v as UiScenarioState["variant"];
  });
  bindNumber("input-stack-low", () => state.stackBand.low, (v) => (state.stackBand.low = v));
  bindNumber("input-stack-base", () => state.stackBand.base, (v) => (state.stackBand.base = v));
  bindNumber("input-stack-high", () => state.stackBand.high, (v) => (state.stackBand.high = v));
  bindNumber("input-comp-low", () => state.componentBand.low, (v) => (state.componentBand.low = v));
  bindNumber("input-comp-base", () => state.componentBand.base, (v) => (state.componentBand.base = v));
  bindNumber("input-comp-high", () => state.componentBand.high, (v) => (state.componentBand.high = v));
  bindNumber("input-added", () => state.totalAddedGw, (v) => (state.totalAddedGw = v));
  for (const region of REGIONS) {
    bindNumber(
      `input-add-${region}`,
      () => state.regionAddedGw[region],
      (v) => (state.regionAddedGw[region] = v),
    );
  }
  bindNumber("input-target", () => state.targetCostUsdPerKw, (v) => (state.targetCostUsdPerKw = v));
  bindNumber("input-utilization", () => state.utilization, (v) => (state.utilization = v));
  bindNumber("input-wacc", () => state.wacc, (v) => (state.wacc = v));
  bindNumber("input-lifetime", () => state.lifetimeYears, (v) => (state.lifetimeYears = v));
  bindNumber("input-sec", () => state.specificEnergyKwhPerKg, (v) => (state.specificEnergyKwhPerKg = v));

  el("copy-resolved").addEventListener("click", () => {
    const text = el("resolved-json").textContent ?? "";
    void navigator.clipboard?.writeText(text);
  });

  buildPanels();
  syncControls();
  await refresh();
}

if (typeof document !== "undefined" && document.getElementById("panels")) {
  void boot();
}
