/**
 * Shapes of the JSON the evaluation API exchanges with this console.
 *
 * The console never computes model figures itself; these types describe what
 * the server returns and the documents the forms edit.
 */

export type TriState = "true" | "false" | "na";

export interface AccessElementDoc {
  name: string;
  function?: string;
  bw_rx_unit: number;
  bw_tx_unit: number;
  availability: number;
  distance_m?: number | null;
  qos_capable?: TriState;
  redundancy_n?: number;
  los_needed?: TriState;
  license_needed?: TriState;
  freq_band_ghz?: number | null;
  users?: number;
  concurrency?: number;
  wireless?: boolean;
  env_support?: boolean[];
  weather_rx_loss?: number;
  weather_tx_loss?: number;
  ubiquity?: TriState;
  health_risk?: number;
  arpu: number[];
  capex: number[];
  opex: number[];
}

export interface ScenarioDoc {
  name: string;
  study_period_t: number;
  interest_rate_k: number;
  branches: Array<{
    backup_mode?: boolean;
    elements?: AccessElementDoc[];
    vector?: Record<string, unknown>;
  }>;
}

export interface RangeDoc {
  u_min: number;
  u_max: number;
}

export interface RequirementsDoc {
  ranges: Record<string, RangeDoc>;
  target_geotype?: string;
  consider_rain?: boolean;
  consider_fog?: boolean;
  consider_snow?: boolean;
  ubiquity_required?: boolean;
}

export interface PreferencesDoc {
  a: Record<string, number>;
  b: Record<string, number>;
}

export interface VectorOut {
  bw_rx_avg: number;
  bw_tx_avg: number;
  availability: number;
  dist_to_ap_m: number;
  dist_total_m: number;
  arpu: number[];
  capex: number[];
  opex: number[];
  npv: number;
  net_cash_flow: number;
  payback_years: number | null;
  cost_first_year: number;
  qos_capable: TriState;
  los_user_ap: TriState;
  los_ap_node: TriState;
  license_needed: TriState;
  ubiquity: TriState;
  health_risk: number;
  env_support: boolean[];
  wireless_any: boolean;
}

export interface ParamVerdictOut {
  kind: "copies" | "complies" | "fails";
  copies: number | null;
  reason: string | null;
}

export interface RedundancyOut {
  per_param: Record<string, ParamVerdictOut>;
  overall: number | null;
  blocking: string[];
  failure_reason: string | null;
}

export interface EvaluateResponse {
  vector: VectorOut;
  contributions: Record<string, { a_term: number; b_term: number }>;
  f1: number;
  f1_percent: number;
  f2_per_eur: number;
  f2_pct_per_keur: number;
  redundancy: RedundancyOut;
}

/** The slice of a ranking row the console renders. */
export interface RankingRowOut {
  name: string;
  f1_percent: number;
  f2_pct_per_keur: number;
  r: number | null;
  vector: { cost_first_year: number } & Partial<VectorOut>;
}

export interface QuadrantOut {
  merit_threshold: number | null;
  cost_threshold: number | null;
  assignments: Record<string, string>;
}

export interface CompareResponse {
  ranking: { metric: "f1" | "f2"; rows: RankingRowOut[] };
  quadrant: QuadrantOut;
  series?: Record<string, unknown>;
}

export interface ForecastResponse {
  f1: number;
  epsilon: number;
  points: Array<{ year: number; f2_per_eur: number; f2_pct_per_keur: number }>;
  saturation_year: number | null;
}

export interface ApiErrorDetail {
  message: string;
  violations: Array<{ path: string; message: string }>;
}
