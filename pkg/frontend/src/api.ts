/**
 * Thin fetch client for the evaluation API. Every figure the console shows
 * comes back from these calls; nothing is computed locally.
 */
import type {
  ApiErrorDetail,
  CompareResponse,
  EvaluateResponse,
  ForecastResponse,
  PreferencesDoc,
  RequirementsDoc,
  ScenarioDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: ApiErrorDetail,
  ) {
    super(detail.message);
  }
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return this.unwrap<T>(response);
  }

  private async unwrap<T>(response: Response): Promise<T> {
    if (!response.ok) {
      let detail: ApiErrorDetail = { message: response.statusText, violations: [] };
      try {
        const parsed = (await response.json()) as { detail?: ApiErrorDetail | string };
        if (typeof parsed.detail === "string") {
          detail = { message: parsed.detail, violations: [] };
        } else if (parsed.detail) {
          detail = parsed.detail;
        }
      } catch {
        // keep the bare status text
      }
      throw new ApiError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  async health(): Promise<{ status: string; version: string }> {
    const response = await fetch(`${this.baseUrl}/api/v1/health`);
    return this.unwrap(response);
  }

  evaluate(
    scenario: ScenarioDoc,
    requirements: RequirementsDoc,
    preferences: PreferencesDoc,
    overlay?: unknown,
  ): Promise<EvaluateResponse> {
    const body: Record<string, unknown> = { scenario, requirements, preferences };
    if (overlay !== undefined) {
      body.overlay = overlay;
    }
    return this.post("/api/v1/evaluate", body);
  }

  compare(
    scenarios: ScenarioDoc[],
    requirements: RequirementsDoc,
    preferences: PreferencesDoc,
    metric: "f1" | "f2",
  ): Promise<CompareResponse> {
    return this.post("/api/v1/compare", { scenarios, requirements, preferences, metric });
  }

  predict(
    f1: number,
    costSeries: Record<string, number>,
    epsilon?: number,
  ): Promise<ForecastResponse> {
    const body: Record<string, unknown> = { f1, cost_series: costSeries };
    if (epsilon !== undefined) {
      body.epsilon = epsilon;
    }
    return this.post("/api/v1/predict", body);
  }

  async listScenarios(): Promise<string[]> {
    const response = await fetch(`${this.baseUrl}/api/v1/scenarios`);
    const body = await this.unwrap<{ scenarios: string[] }>(response);
    return body.scenarios;
  }

  async getScenario(name: string): Promise<ScenarioDoc> {
    const response = await fetch(`${this.baseUrl}/api/v1/scenarios/${encodeURIComponent(name)}`);
    return this.unwrap(response);
  }

  async putScenario(name: string, doc: ScenarioDoc): Promise<void> {
    const response = await fetch(`${this.baseUrl}/api/v1/scenarios/${encodeURIComponent(name)}`, {
      method: "PUT",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(doc),
    });
    await this.unwrap(response);
  }
}
