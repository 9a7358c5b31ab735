/**
 * Layout for the figure-vs-cost quadrant scatter.
 *
 * All classification comes from the server (assignments and the two
 * threshold lines); this module only maps server values onto pixels and
 * flags the discarded points for greyed rendering.
 */
import type { CompareResponse, RankingRowOut } from "./types.js";

export const OPTIMAL_QUADRANT = "+performance -cost";

export interface ScatterPoint {
  name: string;
  x: number; // pixel
  y: number; // pixel
  figure: number;
  cost: number;
  quadrant: string;
  discarded: boolean;
  optimal: boolean;
}

export interface ScatterLayout {
  width: number;
  height: number;
  points: ScatterPoint[];
  thresholdX: number | null; // cost threshold, pixels
  thresholdY: number | null; // figure threshold, pixels
  xTicks: Array<{ pixel: number; label: string }>;
  yTicks: Array<{ pixel: number; label: string }>;
  figureLabel: string;
}

export interface ScatterOptions {
  width?: number;
  height?: number;
  padding?: number;
}

function figureOf(row: RankingRowOut, metric: "f1" | "f2"): number {
  return metric === "f1" ? row.f1_percent : row.f2_pct_per_keur;
}

/** Names in the optimal quadrant for the response's metric. */
export function optimalSet(response: CompareResponse): string[] {
  return Object.entries(response.quadrant.assignments)
    .filter(([, quadrant]) => quadrant === OPTIMAL_QUADRANT)
    .map(([name]) => name)
    .sort();
}

export function buildScatter(
  response: CompareResponse,
  options: ScatterOptions = {},
): ScatterLayout {
  const width = options.width ?? 640;
  const height = options.height ?? 420;
  const padding = options.padding ?? 48;
  const metric = response.ranking.metric;
  const rows = response.ranking.rows;

  const figures = rows.map((row) => figureOf(row, metric));
  const costs = rows.map((row) => row.vector.cost_first_year);
  const figureThreshold = response.quadrant.merit_threshold;
  const costThreshold = response.quadrant.cost_threshold;

  const xMin = Math.min(...costs, costThreshold ?? Infinity);
  const xMax = Math.max(...costs, costThreshold ?? -Infinity);
  const yMin = Math.min(...figures, 0, figureThreshold ?? Infinity);
  const yMax = Math.max(...figures, figureThreshold ?? -Infinity);

  const xSpan = xMax - xMin || 1;
  const ySpan = yMax - yMin || 1;
  const toX = (cost: number): number =>
    padding + ((cost - xMin) / xSpan) * (width - 2 * padding);
  const toY = (figure: number): number =>
    height - padding - ((figure - yMin) / ySpan) * (height - 2 * padding);

  const points: ScatterPoint[] = rows.map((row) => {
    const figure = figureOf(row, metric);
    const quadrant = response.quadrant.assignments[row.name] ?? "discarded";
    return {
      name: row.name,
      x: toX(row.vector.cost_first_year),
      y: toY(figure),
      figure,
      cost: row.vector.cost_first_year,
      quadrant,
      discarded: quadrant === "discarded",
      optimal: quadrant === OPTIMAL_QUADRANT,
    };
  });

  const ticks = (min: number, max: number, count: number): number[] => {
    const step = (max - min) / (count - 1);
    return Array.from({ length: count }, (_, i) => min + i * step);
  };

  return {
    width,
    height,
    points,
    thresholdX: costThreshold === null ? null : toX(costThreshold),
    thresholdY: figureThreshold === null ? null : toY(figureThreshold),
    xTicks: ticks(xMin, xMax, 5).map((v) => ({ pixel: toX(v), label: v.toFixed(0) })),
    yTicks: ticks(yMin, yMax, 5).map((v) => ({ pixel: toY(v), label: v.toFixed(0) })),
    figureLabel: metric === "f1" ? "F1 (%)" : "F2 (%/K€)",
  };
}

/** Quadrant corner labels positioned around the threshold crossing. */
export function quadrantLabels(layout: ScatterLayout): Array<{ x: number; y: number; text: string }> {
  if (layout.thresholdX === null || layout.thresholdY === null) {
    return [];
  }
  const dx = 8;
  const dy = 14;
  return [
    { x: dx, y: layout.thresholdY - dy / 2, text: "+ performance  - cost" },
    { x: dx, y: layout.height - dy, text: "- performance  - cost" },
    { x: layout.thresholdX + dx, y: layout.thresholdY - dy / 2, text: "+ performance  + cost" },
    { x: layout.thresholdX + dx, y: layout.height - dy, text: "- performance  + cost" },
  ];
}

export function renderScatterSvg(layout: ScatterLayout): string {
  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${layout.width} ${layout.height}" class="quadrant-scatter" role="img">`,
  );
  if (layout.thresholdX !== null) {
    parts.push(
      `<line class="threshold" x1="${layout.thresholdX}" y1="0" ` +
        `x2="${layout.thresholdX}" y2="${layout.height}"/>`,
    );
  }
  if (layout.thresholdY !== null) {
    parts.push(
      `<line class="threshold" x1="0" y1="${layout.thresholdY}" ` +
        `x2="${layout.width}" y2="${layout.thresholdY}"/>`,
    );
  }
  for (const label of quadrantLabels(layout)) {
    parts.push(
      `<text class="quadrant-label" x="${label.x}" y="${label.y}">${label.text}</text>`,
    );
  }
  for (const point of layout.points) {
    const cls = point.discarded ? "point discarded" : point.optimal ? "point optimal" : "point";
    parts.push(
      `<circle class="${cls}" cx="${point.x.toFixed(1)}" cy="${point.y.toFixed(1)}" r="6" ` +
        `data-name="${escapeXml(point.name)}"><title>${escapeXml(point.name)}: ` +
        `${point.figure.toFixed(2)} at ${point.cost.toFixed(2)} €</title></circle>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
