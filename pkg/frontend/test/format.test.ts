import { describe, expect, it } from "vitest";

import {
  formatAvailability,
  formatBandwidth,
  formatEuro,
  formatF1Percent,
  formatF2PerKeur,
  formatR,
} from "../src/format.js";

describe("figure formatting", () => {
  it("renders F1 with two decimals", () => {
    expect(formatF1Percent(22.504348)).toBe("22.50 %");
    expect(formatF1Percent(-22.186172)).toBe("-22.19 %");
  });

  it("renders F2 per thousand euros", () => {
    expect(formatF2PerKeur(71.43394)).toBe("71.43 %/K€");
    expect(formatF2PerKeur(198.3396)).toBe("198.34 %/K€");
  });

  it("renders the redundancy badge", () => {
    expect(formatR(3)).toBe("R = 3");
    expect(formatR(null, "cost exceeded at R")).toBe("no R (cost exceeded at R)");
    expect(formatR(null)).toBe("no R");
  });
});

describe("euro formatting", () => {
  it("uses separators and cents", () => {
    expect(formatEuro(315.03717)).toBe("315.04 €");
    expect(formatEuro(12000)).toBe("12,000.00 €");
  });
});

describe("availability nines", () => {
  it("annotates the count of leading nines", () => {
    expect(formatAvailability(0.999999)).toBe("99.9999 % (6 nines)");
    expect(formatAvailability(0.999597)).toBe("99.9597 % (3 nines)");
    expect(formatAvailability(0.99996)).toBe("99.9960 % (4 nines)");
  });

  it("labels a perfect access", () => {
    expect(formatAvailability(1)).toBe("100.0000 % (perfect)");
  });

  it("skips the annotation below one nine", () => {
    expect(formatAvailability(0.5)).toBe("50.0000 %");
  });
});

describe("bandwidth formatting", () => {
  it("keeps four significant digits", () => {
    expect(formatBandwidth(2.753846154)).toBe("2.754 Mbit/s");
    expect(formatBandwidth(10)).toBe("10 Mbit/s");
  });
});
