/**
 * Maps engine validation messages (which name the offending field path,
 * e.g. "stacks.curves.western_pem.learning_rate = 1.2 outside (-1, 1)")
 * onto the control that caused them, so errors render inline next to the
 * input instead of in a global banner.
 */

const PATH_TO_CONTROL: [string, string][] = [
  ["stacks.learning_rate_band", "control-stack-band"],
  ["stacks.curves", "control-stack-band"],
  ["components.learning_rate_band", "control-component-band"],
  ["components.curves", "control-component-band"],
  ["components.capacity_uncertainty", "control-component-band"],
  ["deployment", "control-deployment"],
  ["finance.wacc", "control-wacc"],
  ["finance.lifetime_years", "control-lifetime"],
  ["finance.specific_energy_kwh_per_kg", "control-sec"],
  ["finance", "control-wacc"],
  ["structures.stack", "control-stack-structure"],
  ["structures.component", "control-component-structure"],
  ["request.target_cost_usd_per_kw", "control-target"],
  ["target_cost", "control-target"],
  ["request.utilization", "control-utilization"],
  ["utilization", "control-utilization"],
];

/** Longest matching path prefix wins; unmatched messages go to the banner. */
export function controlForError(detail: string): string | null {
  let best: string | null = null;
  let bestLength = -1;
  for (const [prefix, control] of PATH_TO_CONTROL) {
    if (detail.includes(prefix) && prefix.length > bestLength) {
      best = control;
      bestLength = prefix.length;
    }
  }
  return best;
}

/** Local (client-side) validation fields to control ids. */
export function controlForField(field: string): string {
  if (field.startsWith("stackBand")) return "control-stack-band";
  if (field.startsWith("componentBand")) return "control-component-band";
  if (field.startsWith("regionAddedGw") || field === "totalAddedGw") return "control-deployment";
  if (field === "targetCostUsdPerKw") return "control-target";
  if (field === "utilization") return "control-utilization";
  if (field === "wacc") return "control-wacc";
  if (field === "lifetimeYears") return "control-lifetime";
  if (field === "specificEnergyKwhPerKg") return "control-sec";
  return "control-banner";
}
