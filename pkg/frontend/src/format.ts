/**
 * Display formatting. Numbers shown to the analyst must match the CLI's
 * rendered precision digit for digit, so both surfaces quote the same values.
 */

/** F1 as a percent with two decimals, e.g. "22.50 %". */
export function formatF1Percent(f1Percent: number): string {
  return `${f1Percent.toFixed(2)} %`;
}

/** F2 in percent per thousand euros, e.g. "71.43 %/K€". */
export function formatF2PerKeur(f2PctPerKeur: number): string {
  return `${f2PctPerKeur.toFixed(2)} %/K€`;
}

/** Redundancy badge, e.g. "R = 3" or the failure text. */
export function formatR(overall: number | null, failureReason?: string | null): string {
  if (overall === null) {
    return failureReason ? `no R (${failureReason})` : "no R";
  }
  return `R = ${overall}`;
}

/** Euro amounts with thousands separators and cents. */
export function formatEuro(value: number): string {
  return `${value.toLocaleString("en-US", {
    minimumFractionDigits: 2,
    maximumFractionDigits: 2,
  })} €`;
}

/**
 * Availability as a percent annotated with its "nines" count, e.g.
 * 0.999999 -> "99.9999 % (6 nines)". Counting stops at the first digit that
 * breaks the run; a perfect 1.0 is labeled as such.
 */
export function formatAvailability(probability: number): string {
  const percent = (probability * 100).toFixed(4);
  if (probability >= 1) {
    return `${percent} % (perfect)`;
  }
  const unavailability = 1 - probability;
  const nines = Math.floor(-Math.log10(unavailability) + 1e-9);
  return nines >= 1 ? `${percent} % (${nines} nines)` : `${percent} %`;
}

/** Bandwidth with up to four significant digits, e.g. "2.754 Mbit/s". */
export function formatBandwidth(mbps: number): string {
  return `${Number(mbps.toPrecision(4))} Mbit/s`;
}

export function formatTriState(value: "true" | "false" | "na"): string {
  return value === "na" ? "n/a" : value;
}
