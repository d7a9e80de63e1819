import type { SweepColumn, SweepRow } from "./schema.js";
import type { Figure } from "./svg.js";

export interface FigureRecipe {
  id: string;
  inputs: string[]; // CSV file names under the data directory
  columns: SweepColumn[]; // columns the recipe reads
  output: string; // SVG file name
  build(tables: Map<string, SweepRow[]>): Figure;
}

export function table(tables: Map<string, SweepRow[]>, name: string): SweepRow[] {
  const t = tables.get(name);
  if (!t) throw new Error(`recipe input "${name}" was not loaded`);
  return t;
}
