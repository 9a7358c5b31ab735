/**
 * Console shell: wires the workspace store to the document.
 *
 * Layout: scenario cards on the left; requirement/weight editors and the
 * JSON scenario editor in the middle; evaluation, ranking and quadrant
 * panels on the right. Everything re-renders from the store after each
 * accepted response.
 */
import { ApiClient } from "./api.js";
import { defaultPreferences, defaultRequirements, blankScenario } from "./defaults.js";
import { formatF1Percent, formatF2PerKeur, formatR } from "./format.js";
import { buildScatter, renderScatterSvg, optimalSet } from "./quadrant.js";
import { buildRankingBars, renderRankingHtml } from "./ranking.js";
import { WorkspaceStore } from "./state.js";
import type { ScenarioDoc } from "./types.js";
import { buildVectorRows, renderVectorTableHtml } from "./vector_table.js";

const apiBase = (window as unknown as { UTEM_API_BASE?: string }).UTEM_API_BASE ?? "";
const client = new ApiClient(apiBase);
const store = new WorkspaceStore(client, defaultRequirements(), defaultPreferences());

const el = (id: string): HTMLElement => {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node;
};

function renderScenarioList(): void {
  const list = el("scenario-list");
  if (!store.state.online) {
    list.innerHTML = "";
    return;
  }
  if (store.state.scenarioNames.length === 0) {
    list.innerHTML =
      '<div class="empty-state">library is empty<br/>' +
      '<button id="new-scenario">new scenario</button></div>';
    bindNewScenario();
    return;
  }
  list.innerHTML =
    store.state.scenarioNames
      .map(
        (name) =>
          `<button class="scenario-card" data-name="${name}">${name}</button>`,
      )
      .join("") + '<button id="new-scenario" class="scenario-card ghost">+ new scenario</button>';
  for (const card of list.querySelectorAll<HTMLButtonElement>(".scenario-card[data-name]")) {
    card.addEventListener("click", () => {
      void store.openScenario(card.dataset.name!);
    });
  }
  bindNewScenario();
}

function bindNewScenario(): void {
  document.getElementById("new-scenario")?.addEventListener("click", () => {
    store.useScenario(blankScenario());
    renderScenarioEditor();
  });
}

function renderOfflineBanner(): void {
  const banner = el("offline-banner");
  banner.hidden = store.state.online;
}

function renderScenarioEditor(): void {
  const editor = el("scenario-json") as HTMLTextAreaElement;
  if (store.state.scenario && document.activeElement !== editor) {
    editor.value = JSON.stringify(store.state.scenario, null, 2);
  }
}

function renderRequirementInputs(): void {
  const container = el("requirement-ranges");
  if (container.childElementCount > 0) {
    return; // inputs built once; edits flow through listeners
  }
  const ranges = store.state.requirements.ranges;
  container.innerHTML = Object.keys(ranges)
    .map((param) => {
      const range = ranges[param]!;
      return (
        `<label class="range-row" data-param="${param}"><span>${param}</span>` +
        `<input type="number" step="any" class="u-min" value="${range.u_min}"/>` +
        `<input type="number" step="any" class="u-max" value="${range.u_max}"/>` +
        `<em class="field-error" hidden></em></label>`
      );
    })
    .join("");
  for (const row of container.querySelectorAll<HTMLElement>(".range-row")) {
    const param = row.dataset.param!;
    for (const cls of ["u-min", "u-max"] as const) {
      row.querySelector<HTMLInputElement>(`.${cls}`)!.addEventListener("input", (event) => {
        const value = Number((event.target as HTMLInputElement).value);
        const range = store.state.requirements.ranges[param]!;
        if (cls === "u-min") {
          range.u_min = value;
        } else {
          range.u_max = value;
        }
        store.editApplied();
      });
    }
  }
}

function renderFieldErrors(): void {
  for (const row of document.querySelectorAll<HTMLElement>(".range-row")) {
    const param = row.dataset.param!;
    const slot = row.querySelector<HTMLElement>(".field-error")!;
    const hit = store.state.fieldErrors.find((e) => e.path.includes(param));
    slot.hidden = !hit;
    slot.textContent = hit ? hit.message : "";
    row.classList.toggle("invalid", Boolean(hit));
  }
  const serverBox = el("server-errors");
  const combined = store.state.serverErrors;
  serverBox.hidden = combined.length === 0;
  serverBox.innerHTML = combined
    .map((e) => `<div>${e.path ? `<code>${e.path}</code> ` : ""}${e.message}</div>`)
    .join("");
}

function renderEvaluation(): void {
  const evaluation = store.state.evaluation;
  const gauges = el("figures");
  if (!evaluation) {
    gauges.innerHTML = '<span class="placeholder">edit inputs to evaluate</span>';
    el("vector-panel").innerHTML = "";
    return;
  }
  const badgeClass = evaluation.redundancy.overall === null ? "r-badge fail" : "r-badge";
  gauges.innerHTML =
    `<span class="figure">F1 <strong>${formatF1Percent(evaluation.f1_percent)}</strong></span>` +
    `<span class="figure">F2 <strong>${formatF2PerKeur(evaluation.f2_pct_per_keur)}</strong></span>` +
    `<span class="${badgeClass}">${formatR(
      evaluation.redundancy.overall,
      evaluation.redundancy.failure_reason,
    )}</span>`;
  el("vector-panel").innerHTML = renderVectorTableHtml(buildVectorRows(evaluation));
}

function renderComparison(): void {
  const comparison = store.state.comparison;
  const panel = el("ranking-panel");
  const scatter = el("quadrant-panel");
  if (!comparison) {
    panel.innerHTML = "";
    scatter.innerHTML = "";
    return;
  }
  panel.innerHTML = renderRankingHtml(buildRankingBars(comparison));
  const survivors = comparison.ranking.rows.filter(
    (row) => comparison.quadrant.assignments[row.name] !== "discarded",
  );
  if (survivors.length === 0) {
    scatter.innerHTML =
      '<div class="empty-state">every technology has a non-positive figure; nothing to place</div>';
    return;
  }
  const layout = buildScatter(comparison);
  scatter.innerHTML =
    renderScatterSvg(layout) +
    `<div class="optimal-note">optimal quadrant: ${optimalSet(comparison).join(", ") || "none"}</div>`;
  for (const point of scatter.querySelectorAll<SVGCircleElement>("circle.point")) {
    point.addEventListener("click", () => {
      store.togglePin(point.dataset.name!);
    });
  }
}

function renderPinned(): void {
  el("pinned").textContent = store.state.pinned.length
    ? `pinned for diff: ${store.state.pinned.join(" vs ")}`
    : "";
}

async function compareLibrary(): Promise<void> {
  const docs: ScenarioDoc[] = [];
  for (const name of store.state.scenarioNames) {
    docs.push(await client.getScenario(name));
  }
  if (docs.length) {
    await store.compareAll(docs);
  }
}

function bindControls(): void {
  (el("scenario-json") as HTMLTextAreaElement).addEventListener("input", (event) => {
    try {
      const doc = JSON.parse((event.target as HTMLTextAreaElement).value) as ScenarioDoc;
      store.useScenario(doc);
    } catch {
      // incomplete JSON while typing; wait for a parseable state
    }
  });
  el("metric-f1").addEventListener("click", () => {
    store.setMetric("f1");
    void compareLibrary();
  });
  el("metric-f2").addEventListener("click", () => {
    store.setMetric("f2");
    void compareLibrary();
  });
  el("compare-all").addEventListener("click", () => {
    void compareLibrary();
  });
  el("retry-connection").addEventListener("click", () => {
    void store.loadWorkspace();
  });
}

store.subscribe(() => {
  renderOfflineBanner();
  renderScenarioList();
  renderScenarioEditor();
  renderRequirementInputs();
  renderFieldErrors();
  renderEvaluation();
  renderComparison();
  renderPinned();
  el("metric-f1").classList.toggle("active", store.state.metric === "f1");
  el("metric-f2").classList.toggle("active", store.state.metric === "f2");
});

bindControls();
renderRequirementInputs();
void store.loadWorkspace();
