/** Horizontal bar layout for the per-technology ranking panel. */
import type { CompareResponse } from "./types.js";

export interface RankingBar {
  name: string;
  value: number;
  widthPct: number; // 0..100, proportional to |value| over the max magnitude
  negative: boolean;
  label: string;
  r: number | null;
}

export function buildRankingBars(response: CompareResponse): RankingBar[] {
  const metric = response.ranking.metric;
  const rows = response.ranking.rows;
  const values = rows.map((row) =>
    metric === "f1" ? row.f1_percent : row.f2_pct_per_keur,
  );
  const maxMagnitude = Math.max(...values.map(Math.abs), 1e-12);
  return rows.map((row, i) => {
    const value = values[i]!;
    return {
      name: row.name,
      value,
      widthPct: (Math.abs(value) / maxMagnitude) * 100,
      negative: value < 0,
      label: `${value.toFixed(2)} ${metric === "f1" ? "%" : "%/K€"}`,
      r: row.r,
    };
  });
}

export function renderRankingHtml(bars: RankingBar[]): string {
  const rows = bars.map((bar) => {
    const cls = bar.negative ? "bar negative" : "bar";
    const rBadge =
      bar.r === null
        ? '<span class="r-badge fail">no R</span>'
        : `<span class="r-badge">R=${bar.r}</span>`;
    return (
      `<div class="ranking-row" data-name="${escapeHtml(bar.name)}">` +
      `<span class="ranking-name">${escapeHtml(bar.name)}</span>` +
      `<span class="ranking-track"><span class="${cls}" style="width:${bar.widthPct.toFixed(1)}%"></span></span>` +
      `<span class="ranking-value">${bar.label}</span>${rBadge}</div>`
    );
  });
  return rows.join("");
}

function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
