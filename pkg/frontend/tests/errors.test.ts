import { describe, expect, it } from "vitest";

import { controlForError, controlForField } from "../src/errors";

describe("controlForError", () => {
  it("maps engine field paths onto the owning control", () => {
    expect(
      controlForError("stacks.curves.western_pem.learning_rate = 1.2 outside (-1, 1)"),
    ).toBe("control-stack-band");
    expect(
      controlForError("components.learning_rate_band: requires low <= base <= high"),
    ).toBe("control-component-band");
    expect(
      controlForError("deployment 'what-if'.us = 0.1 below current base (0.2)"),
    ).toBe("control-deployment");
    expect(controlForError("finance.wacc = -0.01 must be >= 0")).toBe("control-wacc");
    expect(controlForError("target_cost = -5 must be > 0")).toBe("control-target");
  });

  it("prefers the longest matching prefix", () => {
    expect(controlForError("finance.lifetime_years = 0 must be >= 1")).toBe(
      "control-lifetime",
    );
  });

  it("returns null for unmapped messages (banner fallback)", () => {
    expect(controlForError("something unrelated happened")).toBeNull();
  });
});

describe("controlForField", () => {
  it("maps client-side validation fields", () => {
    expect(controlForField("stackBand.high")).toBe("control-stack-band");
    expect(controlForField("regionAddedGw.china")).toBe("control-deployment");
    expect(controlForField("utilization")).toBe("control-utilization");
    expect(controlForField("unknown")).toBe("control-banner");
  });
});
