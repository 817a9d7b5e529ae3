"""
Deployment and investment required to reach stack cost targets
==============================================================

Inverting the experience curve answers the planning question directly: how
many gigawatts, and how many dollars of cumulative stack procurement, until
Western PEM reaches a given cost? Under pooled learning the answer explodes,
because the pooled base needs enormous additions to double at all.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from learncurve import (
    STACKS_BENCHMARK,
    StackStructure,
    StackVariant,
    builtin_presets,
    investment_to_target,
)

scenario = builtin_presets().scenario(STACKS_BENCHMARK)
subject = StackVariant.WESTERN_PEM

targets = np.linspace(550.0, 100.0, 46)
structures = (StackStructure.SHARED, StackStructure.TECHNOLOGY_FRAGMENTED)

fig, (ax_inv, ax_cap) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
for structure in structures:
    results = [investment_to_target(scenario, subject, structure, t) for t in targets]
    ax_inv.semilogy(targets, [r.required_investment_usd for r in results],
                    label=structure.value.replace("_", " "))
    ax_cap.semilogy(targets, [r.required_family_capacity_gw for r in results],
                    label=structure.value.replace("_", " "))

ax_inv.set_ylabel("cumulative investment (USD)")
ax_cap.set_ylabel("family capacity (GW)")
ax_cap.set_xlabel("Western PEM cost target (USD/kW)")
ax_inv.invert_xaxis()
ax_inv.legend()
fig.tight_layout()
fig.savefig("cost_target_requirements.png", dpi=150)
print("wrote cost_target_requirements.png\n")

# Headline comparisons at two targets.
for target in (300.0, 100.0):
    print(f"target {target:.0f} USD/kW:")
    for structure in structures:
        r = investment_to_target(scenario, subject, structure, target)
        print(
            f"  {structure.value:24s} {r.required_family_capacity_gw:9.1f} GW  "
            f"{r.required_investment_usd / 1e9:8.1f} B USD"
        )
