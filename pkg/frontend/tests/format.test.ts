import { describe, expect, it } from "vitest";

import { display, reprFloat } from "../src/format";

// reference pairs frozen from the engine's own float serialization
const REFERENCE: [number, string][] = [
  [0.0, "0.0"],
  [-0.0, "-0.0"],
  [600.0, "600.0"],
  [0.05, "0.05"],
  [0.5, "0.5"],
  [1.0, "1.0"],
  [353.6297313261885, "353.6297313261885"],
  [2925182861.8505907, "2925182861.8505907"],
  [903661764301.1018, "903661764301.1018"],
  [1288.3413374428833, "1288.3413374428833"],
  [0.40948444045243626, "0.40948444045243626"],
  [1e16, "1e+16"],
  [1.5e16, "1.5e+16"],
  [9999999999999998.0, "9999999999999998.0"],
  [1e-5, "1e-05"],
  [1.5e-5, "1.5e-05"],
  [0.0001, "0.0001"],
  [1e21, "1e+21"],
  [1.2345678901234568e20, "1.2345678901234568e+20"],
  [-353.63, "-353.63"],
  [123.0, "123.0"],
  [0.1, "0.1"],
  [0.2, "0.2"],
  [0.30000000000000004, "0.30000000000000004"],
  [1e100, "1e+100"],
  [2.5e-10, "2.5e-10"],
  [140.0, "140.0"],
  [0.15000000000000002, "0.15000000000000002"],
  [70220000000.0, "70220000000.0"],
  [1.7976931348623157e308, "1.7976931348623157e+308"],
  [5e-324, "5e-324"],
];

describe("reprFloat", () => {
  it.each(REFERENCE)("formats %s as the engine does", (value, expected) => {
    expect(reprFloat(value)).toBe(expected);
  });

  it("round-trips every reference value", () => {
    for (const [value, text] of REFERENCE) {
      expect(Number(text)).toBe(value);
    }
  });

  it("handles non-finite values like the engine's text form", () => {
    expect(reprFloat(Number.NaN)).toBe("nan");
    expect(reprFloat(Infinity)).toBe("inf");
    expect(reprFloat(-Infinity)).toBe("-inf");
  });

  it("round-trips random doubles through its own text", () => {
    let seed = 42;
    const random = () => {
      // deterministic LCG so failures are reproducible
      seed = (seed * 1664525 + 1013904223) >>> 0;
      return seed / 2 ** 32;
    };
    for (let i = 0; i < 2000; i++) {
      const value = (random() - 0.5) * 10 ** Math.floor(random() * 40 - 20);
      expect(Number(reprFloat(value))).toBe(value);
    }
  });
});

describe("display", () => {
  it("keeps panel readouts compact", () => {
    expect(display(1288.3413374428833)).toBe("1288");
    expect(display(0.40948444045243626)).toBe("0.4095");
    expect(display(2925182861.85)).toBe("2.925e+9");
  });
});
