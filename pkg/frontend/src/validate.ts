/**
 * Client-side form checks. These gate requests (no POST leaves the page while
 * a field is invalid) but never replace the server's own validation.
 */
import type { AccessElementDoc, RequirementsDoc, ScenarioDoc } from "./types.js";

export interface FieldError {
  path: string;
  message: string;
}

function checkNumber(
  errors: FieldError[],
  path: string,
  value: unknown,
  opts: { min?: number; max?: number; minExclusive?: boolean },
): void {
  if (typeof value !== "number" || Number.isNaN(value)) {
    errors.push({ path, message: "must be a number" });
    return;
  }
  if (opts.min !== undefined) {
    if (opts.minExclusive ? value <= opts.min : value < opts.min) {
      errors.push({ path, message: `must be ${opts.minExclusive ? ">" : ">="} ${opts.min}` });
    }
  }
  if (opts.max !== undefined && value > opts.max) {
    errors.push({ path, message: `must be <= ${opts.max}` });
  }
}

export function validateElement(element: AccessElementDoc, path: string): FieldError[] {
  const errors: FieldError[] = [];
  checkNumber(errors, `${path}.availability`, element.availability, { min: 0, max: 1 });
  checkNumber(errors, `${path}.bw_rx_unit`, element.bw_rx_unit, { min: 0 });
  checkNumber(errors, `${path}.bw_tx_unit`, element.bw_tx_unit, { min: 0 });
  if (element.concurrency !== undefined) {
    checkNumber(errors, `${path}.concurrency`, element.concurrency, {
      min: 0,
      max: 1,
      minExclusive: true,
    });
  }
  if (element.users !== undefined) {
    checkNumber(errors, `${path}.users`, element.users, { min: 1 });
  }
  if (element.redundancy_n !== undefined) {
    checkNumber(errors, `${path}.redundancy_n`, element.redundancy_n, { min: 1 });
  }
  if (element.health_risk !== undefined) {
    checkNumber(errors, `${path}.health_risk`, element.health_risk, { min: 0, max: 3 });
  }
  if (element.distance_m !== undefined && element.distance_m !== null) {
    checkNumber(errors, `${path}.distance_m`, element.distance_m, { min: 0 });
  }
  return errors;
}

export function validateScenario(doc: ScenarioDoc): FieldError[] {
  const errors: FieldError[] = [];
  if (!doc.name) {
    errors.push({ path: "name", message: "scenario needs a name" });
  }
  checkNumber(errors, "study_period_t", doc.study_period_t, { min: 1 });
  checkNumber(errors, "interest_rate_k", doc.interest_rate_k, { min: -1, minExclusive: true });
  if (!doc.branches.length) {
    errors.push({ path: "branches", message: "needs at least one branch" });
  }
  if (doc.branches.length && doc.branches.every((b) => b.backup_mode)) {
    errors.push({ path: "branches", message: "at least one branch must be aggregate (non-backup)" });
  }
  doc.branches.forEach((branch, b) => {
    (branch.elements ?? []).forEach((element, e) => {
      errors.push(...validateElement(element, `branches[${b}].elements[${e}]`));
      for (const series of ["arpu", "capex", "opex"] as const) {
        if (element[series].length !== doc.study_period_t) {
          errors.push({
            path: `branches[${b}].elements[${e}].${series}`,
            message: `needs ${doc.study_period_t} yearly values`,
          });
        }
      }
    });
  });
  return errors;
}

export function validateRequirements(doc: RequirementsDoc): FieldError[] {
  const errors: FieldError[] = [];
  for (const [param, range] of Object.entries(doc.ranges)) {
    checkNumber(errors, `ranges.${param}.u_min`, range.u_min, {});
    checkNumber(errors, `ranges.${param}.u_max`, range.u_max, {});
    if (typeof range.u_min === "number" && typeof range.u_max === "number") {
      if (range.u_min > range.u_max) {
        errors.push({ path: `ranges.${param}`, message: "u_min must not exceed u_max" });
      }
    }
    if (param === "availability") {
      checkNumber(errors, `ranges.${param}.u_min`, range.u_min, { min: 0, max: 1 });
      checkNumber(errors, `ranges.${param}.u_max`, range.u_max, { min: 0, max: 1 });
    }
  }
  return errors;
}
