/** Rows for the output-vector table, with per-parameter weighted contributions. */
import {
  formatAvailability,
  formatBandwidth,
  formatEuro,
  formatTriState,
} from "./format.js";
import type { EvaluateResponse } from "./types.js";

export interface VectorRow {
  parameter: string;
  value: string;
  aTerm: string;
  bTerm: string;
}

export function buildVectorRows(response: EvaluateResponse): VectorRow[] {
  const v = response.vector;
  const raw: Array<[string, string]> = [
    ["bw_rx_avg", formatBandwidth(v.bw_rx_avg)],
    ["bw_tx_avg", formatBandwidth(v.bw_tx_avg)],
    ["availability", formatAvailability(v.availability)],
    ["dist_to_ap_m", `${v.dist_to_ap_m.toLocaleString("en-US")} m`],
    ["dist_total_m", `${v.dist_total_m.toLocaleString("en-US")} m`],
    ["npv", formatEuro(v.npv)],
    ["net_cash_flow", formatEuro(v.net_cash_flow)],
    ["payback_years", v.payback_years === null ? "never" : `${v.payback_years}`],
    ["cost_first_year", formatEuro(v.cost_first_year)],
    ["qos_capable", formatTriState(v.qos_capable)],
    ["los_user_ap", formatTriState(v.los_user_ap)],
    ["los_ap_node", formatTriState(v.los_ap_node)],
    ["license_needed", formatTriState(v.license_needed)],
    ["ubiquity", formatTriState(v.ubiquity)],
    ["health_risk", `${v.health_risk}`],
  ];
  return raw.map(([parameter, value]) => {
    const contribution = response.contributions[parameter];
    return {
      parameter,
      value,
      aTerm: contribution ? contribution.a_term.toFixed(4) : "",
      bTerm: contribution ? contribution.b_term.toFixed(4) : "",
    };
  });
}

export function renderVectorTableHtml(rows: VectorRow[]): string {
  const body = rows
    .map(
      (row) =>
        `<tr><td>${row.parameter}</td><td>${row.value}</td>` +
        `<td class="num">${row.aTerm}</td><td class="num">${row.bTerm}</td></tr>`,
    )
    .join("");
  return (
    "<table class='vector-table'><thead><tr>" +
    "<th>parameter</th><th>value</th><th>a·ŷ</th><th>b·y</th>" +
    `</tr></thead><tbody>${body}</tbody></table>`
  );
}
