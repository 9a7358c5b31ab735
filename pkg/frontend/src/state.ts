/**
 * Workspace state and the what-if loop.
 *
 * Edits mark the state dirty and schedule a debounced re-evaluation; the
 * sequencer drops responses that were overtaken by a newer edit, so panels
 * only ever show the answer to the latest input. No request leaves while a
 * form field is invalid.
 */
import type { ApiClient } from "./api.js";
import { ApiError } from "./api.js";
import { RequestSequencer, debounce } from "./sequence.js";
import type {
  CompareResponse,
  EvaluateResponse,
  PreferencesDoc,
  RequirementsDoc,
  ScenarioDoc,
} from "./types.js";
import type { FieldError } from "./validate.js";
import { validateRequirements, validateScenario } from "./validate.js";

export type Listener = () => void;

export interface WorkspaceState {
  online: boolean;
  scenarioNames: string[];
  scenario: ScenarioDoc | null;
  requirements: RequirementsDoc;
  preferences: PreferencesDoc;
  metric: "f1" | "f2";
  fieldErrors: FieldError[];
  serverErrors: FieldError[];
  evaluation: EvaluateResponse | null;
  comparison: CompareResponse | null;
  pinned: string[];
  busy: boolean;
}

export class WorkspaceStore {
  readonly state: WorkspaceState;
  private readonly listeners: Listener[] = [];
  private readonly evalSeq = new RequestSequencer();
  private readonly compareSeq = new RequestSequencer();
  private readonly scheduleEvaluate: (() => void) & { cancel: () => void };

  constructor(
    private readonly client: ApiClient,
    requirements: RequirementsDoc,
    preferences: PreferencesDoc,
    debounceMs = 300,
  ) {
    this.state = {
      online: false,
      scenarioNames: [],
      scenario: null,
      requirements,
      preferences,
      metric: "f1",
      fieldErrors: [],
      serverErrors: [],
      evaluation: null,
      comparison: null,
      pinned: [],
      busy: false,
    };
    this.scheduleEvaluate = debounce(() => {
      void this.evaluateNow();
    }, debounceMs);
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) {
      listener();
    }
  }

  async loadWorkspace(): Promise<void> {
    try {
      await this.client.health();
      this.state.scenarioNames = await this.client.listScenarios();
      this.state.online = true;
    } catch {
      this.state.online = false;
    }
    this.emit();
  }

  async openScenario(name: string): Promise<void> {
    this.state.scenario = await this.client.getScenario(name);
    this.state.evaluation = null;
    this.emit();
    this.editApplied();
  }

  useScenario(doc: ScenarioDoc): void {
    this.state.scenario = doc;
    this.editApplied();
  }

  setMetric(metric: "f1" | "f2"): void {
    if (this.state.metric !== metric) {
      this.state.metric = metric;
      this.emit();
    }
  }

  togglePin(name: string): void {
    const at = this.state.pinned.indexOf(name);
    if (at >= 0) {
      this.state.pinned.splice(at, 1);
    } else {
      this.state.pinned.push(name);
    }
    this.emit();
  }

  /** Called after any form edit: validate locally, then debounce the POST. */
  editApplied(): void {
    this.state.fieldErrors = this.validate();
    this.state.serverErrors = [];
    this.emit();
    if (this.state.fieldErrors.length === 0 && this.state.scenario) {
      this.scheduleEvaluate();
    }
  }

  private validate(): FieldError[] {
    const errors: FieldError[] = [];
    if (this.state.scenario) {
      errors.push(...validateScenario(this.state.scenario));
    }
    errors.push(...validateRequirements(this.state.requirements));
    return errors;
  }

  async evaluateNow(): Promise<void> {
    if (!this.state.scenario || this.state.fieldErrors.length > 0) {
      return;
    }
    const tag = this.evalSeq.next();
    this.state.busy = true;
    this.emit();
    try {
      const result = await this.client.evaluate(
        this.state.scenario,
        this.state.requirements,
        this.state.preferences,
      );
      if (this.evalSeq.accept(tag)) {
        this.state.evaluation = result;
        this.state.serverErrors = [];
      }
    } catch (error) {
      if (this.evalSeq.accept(tag)) {
        this.state.evaluation = null;
        this.state.serverErrors =
          error instanceof ApiError
            ? error.detail.violations.length
              ? error.detail.violations
              : [{ path: "", message: error.detail.message }]
            : [{ path: "", message: String(error) }];
      }
    } finally {
      this.state.busy = false;
      this.emit();
    }
  }

  async compareAll(scenarios: ScenarioDoc[]): Promise<void> {
    const tag = this.compareSeq.next();
    const result = await this.client.compare(
      scenarios,
      this.state.requirements,
      this.state.preferences,
      this.state.metric,
    );
    if (this.compareSeq.accept(tag)) {
      this.state.comparison = result;
      this.emit();
    }
  }
}
