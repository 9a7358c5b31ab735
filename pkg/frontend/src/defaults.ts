/**
 * Built-in starting documents for an empty workspace: the residential
 * profile (30 Mbit/s floor, carrier-grade ceiling, rain considered) and the
 * standard weight set. Both are fully editable in the forms.
 */
import type { PreferencesDoc, RequirementsDoc, ScenarioDoc } from "./types.js";

export function defaultRequirements(): RequirementsDoc {
  return {
    ranges: {
      bw_rx_avg: { u_min: 30, u_max: 100 },
      bw_tx_avg: { u_min: 3, u_max: 10 },
      availability: { u_min: 0.9999, u_max: 0.999999 },
      dist_to_ap_m: { u_min: 20, u_max: 30000 },
      dist_total_m: { u_min: 20, u_max: 30000 },
      cost_first_year: { u_min: 0, u_max: 12000 },
      qos_capable: { u_min: 0, u_max: 1 },
      los_user_ap: { u_min: 0, u_max: 1 },
      los_ap_node: { u_min: 0, u_max: 1 },
      license_needed: { u_min: 0, u_max: 1 },
      ubiquity: { u_min: 0, u_max: 1 },
      health_risk: { u_min: 0, u_max: 3 },
    },
    target_geotype: "suburban",
    consider_rain: true,
    consider_fog: false,
    consider_snow: false,
    ubiquity_required: true,
  };
}

export function defaultPreferences(): PreferencesDoc {
  return {
    a: {
      bw_rx_avg: 1,
      bw_tx_avg: 1,
      availability: 0.1,
      dist_to_ap_m: 1,
      dist_total_m: 1,
      cost_first_year: 0,
      qos_capable: 1,
      los_user_ap: -1,
      los_ap_node: -1,
      license_needed: -1,
      ubiquity: 1,
      health_risk: -1,
    },
    b: { cost_first_year: 1 },
  };
}

export function blankScenario(): ScenarioDoc {
  return {
    name: "new scenario",
    study_period_t: 3,
    interest_rate_k: 0.01,
    branches: [
      {
        backup_mode: false,
        elements: [
          {
            name: "end-user element",
            bw_rx_unit: 100,
            bw_tx_unit: 100,
            availability: 0.9999,
            ubiquity: "true",
            arpu: [0, 0, 0],
            capex: [0, 0, 0],
            opex: [0, 0, 0],
          },
        ],
      },
    ],
  };
}
