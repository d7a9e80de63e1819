import type { SweepRow } from "./schema.js";

export interface Curve {
  label: string;
  x: number[];
  y: number[];
  color?: string;
  dash?: string;
}

// Groups rows by beta, keys sorted ascending with Infinity last.
export function groupByBeta(rows: SweepRow[]): Map<number, SweepRow[]> {
  const groups = new Map<number, SweepRow[]>();
  for (const r of rows) {
    const g = groups.get(r.beta);
    if (g) g.push(r);
    else groups.set(r.beta, [r]);
  }
  const sorted = [...groups.keys()].sort((a, b) => a - b);
  return new Map(sorted.map((b) => [b, groups.get(b)!]));
}

export function betaLabel(beta: number): string {
  return Number.isFinite(beta) ? `β = ${beta}` : "β → ∞";
}

export function curveOf(
  rows: SweepRow[],
  x: (r: SweepRow) => number,
  y: (r: SweepRow) => number,
  label: string,
): Curve {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const r of rows) {
    const yv = y(r);
    if (Number.isFinite(yv)) {
      xs.push(x(r));
      ys.push(yv);
    }
  }
  return { label, x: xs, y: ys };
}

// Population per unit inverse temperature. Zero-temperature rows already
// store the beta-divided density in the D column.
export function populationPerBeta(r: SweepRow): number {
  return r.lowT ? r.D : r.D / r.beta;
}

export function entropyPerBeta(r: SweepRow): number {
  return r.lowT ? r.S_irr : r.S_irr / r.beta;
}
