/**
 * Shareable what-ifs: the whole control state round-trips through the URL
 * fragment as compact query parameters, so any chart state is a link.
 */

import type { UiScenarioState } from "./state.js";
import type { ComponentStructure, Region, StackStructure, StackVariant } from "./types.js";
import { COMPONENT_STRUCTURES, REGIONS, STACK_STRUCTURES, STACK_VARIANTS } from "./types.js";

function bandToken(band: { low: number; base: number; high: number }): string {
  return `${band.low},${band.base},${band.high}`;
}

function parseBand(token: string): { low: number; base: number; high: number } | null {
  const parts = token.split(",").map(Number);
  if (parts.length !== 3 || parts.some((x) => !Number.isFinite(x))) return null;
  return { low: parts[0]!, base: parts[1]!, high: parts[2]! };
}

export function encodeState(state: UiScenarioState): string {
  const params = new URLSearchParams();
  params.set("preset", state.preset);
  params.set("ss", state.stackStructure);
  params.set("cs", state.componentStructure);
  params.set("sb", bandToken(state.stackBand));
  params.set("cb", bandToken(state.componentBand));
  params.set("add", String(state.totalAddedGw));
  params.set("radd", REGIONS.map((r) => state.regionAddedGw[r]).join(","));
  params.set("target", String(state.targetCostUsdPerKw));
  params.set("u", String(state.utilization));
  params.set("v", state.variant);
  params.set("wacc", String(state.wacc));
  params.set("life", String(state.lifetimeYears));
  params.set("sec", String(state.specificEnergyKwhPerKg));
  return params.toString();
}

export function decodeState(fragment: string, fallback: UiScenarioState): UiScenarioState {
  const params = new URLSearchParams(fragment.replace(/^#/, ""));
  const state: UiScenarioState = {
    ...fallback,
    stackBand: { ...fallback.stackBand },
    componentBand: { ...fallback.componentBand },
    regionAddedGw: { ...fallback.regionAddedGw },
  };
  const preset = params.get("preset");
  if (preset) state.preset = preset;
  const ss = params.get("ss");
  if (ss && (STACK_STRUCTURES as readonly string[]).includes(ss)) {
    state.stackStructure = ss as StackStructure;
  }
  const cs = params.get("cs");
  if (cs && (COMPONENT_STRUCTURES as readonly string[]).includes(cs)) {
    state.componentStructure = cs as ComponentStructure;
  }
  const sb = params.get("sb") && parseBand(params.get("sb")!);
  if (sb) state.stackBand = sb;
  const cb = params.get("cb") && parseBand(params.get("cb")!);
  if (cb) state.componentBand = cb;
  const add = Number(params.get("add"));
  if (params.has("add") && Number.isFinite(add)) state.totalAddedGw = add;
  const radd = params.get("radd")?.split(",").map(Number);
  if (radd && radd.length === REGIONS.length && radd.every(Number.isFinite)) {
    REGIONS.forEach((region: Region, index) => {
      state.regionAddedGw[region] = radd[index]!;
    });
  }
  const target = Number(params.get("target"));
  if (params.has("target") && Number.isFinite(target)) state.targetCostUsdPerKw = target;
  const u = Number(params.get("u"));
  if (params.has("u") && Number.isFinite(u)) state.utilization = u;
  const v = params.get("v");
  if (v && (STACK_VARIANTS as readonly string[]).includes(v)) state.variant = v as StackVariant;
  const wacc = Number(params.get("wacc"));
  if (params.has("wacc") && Number.isFinite(wacc)) state.wacc = wacc;
  const life = Number(params.get("life"));
  if (params.has("life") && Number.isInteger(life)) state.lifetimeYears = life;
  const sec = Number(params.get("sec"));
  if (params.has("sec") && Number.isFinite(sec)) state.specificEnergyKwhPerKg = sec;
  return state;
}
