/**
 * The console must quote exactly the figures the CLI prints for the same
 * inputs. Fixtures are captured from the real backends: the evaluate
 * response JSON and the CLI's table rendering of the bundled DSL scenario.
 */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import { formatF1Percent, formatF2PerKeur, formatR } from "../src/format.js";
import { buildVectorRows } from "../src/vector_table.js";
import type { EvaluateResponse } from "../src/types.js";

const here = dirname(fileURLToPath(import.meta.url));
const response = JSON.parse(
  readFileSync(join(here, "fixtures", "adsl_evaluate.json"), "utf-8"),
) as EvaluateResponse;
const cliTable = readFileSync(join(here, "fixtures", "adsl_cli_table.txt"), "utf-8");

function cliValue(pattern: RegExp): string {
  const match = cliTable.match(pattern);
  if (!match) {
    throw new Error(`CLI table does not match ${pattern}`);
  }
  return match[1]!;
}

describe("display parity with the CLI", () => {
  it("quotes the same F1 to the displayed precision", () => {
    const cliF1 = cliValue(/F1 = (-?\d+\.\d{2}) %/);
    expect(formatF1Percent(response.f1_percent)).toBe(`${cliF1} %`);
  });

  it("quotes the same F2 to the displayed precision", () => {
    const cliF2 = cliValue(/F2 = (-?\d+\.\d{2}) %\/K EUR/);
    expect(formatF2PerKeur(response.f2_pct_per_keur)).toBe(`${cliF2} %/K€`);
  });

  it("quotes the same R", () => {
    const cliR = cliValue(/meets requirements with R = (\d+)/);
    expect(formatR(response.redundancy.overall)).toBe(`R = ${cliR}`);
  });

  it("agrees with the expected DSL figures", () => {
    expect(formatF1Percent(response.f1_percent)).toBe("22.50 %");
    expect(formatF2PerKeur(response.f2_pct_per_keur)).toBe("71.43 %/K€");
    expect(formatR(response.redundancy.overall)).toBe("R = 3");
  });

  it("renders every scored parameter's contribution", () => {
    const rows = buildVectorRows(response);
    const reception = rows.find((row) => row.parameter === "bw_rx_avg")!;
    expect(reception.value).toBe("10 Mbit/s");
    expect(reception.aTerm).toBe("-0.2857");
    const cost = rows.find((row) => row.parameter === "cost_first_year")!;
    expect(cost.bTerm).toBe("315.0372");
  });
});
