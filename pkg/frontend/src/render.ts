import { readFileSync, writeFileSync, mkdirSync } from "node:fs";
import { join } from "node:path";
import { parseSweepCsv, SchemaError, SWEEP_COLUMNS, type SweepRow } from "./schema.js";
import type { FigureRecipe } from "./recipe.js";
import { figureSvg } from "./svg.js";

export interface RenderOptions {
  dataDir: string;
  outDir: string;
}

export function loadTable(path: string): SweepRow[] {
  const rows = parseSweepCsv(readFileSync(path, "utf8"), path);
  const bad = rows.find((r) => r.error !== "");
  if (bad) {
    throw new Error(`${path}: row at g0=${bad.g0}, beta=${bad.beta} carries an error: ${bad.error}`);
  }
  return rows;
}

// Renders one recipe to an SVG file. Everything plotted comes straight from
// the CSV; failures (missing file, schema mismatch, empty CSV, failed rows)
// throw before any output file is created.
export function renderRecipe(recipe: FigureRecipe, opts: RenderOptions): string {
  for (const col of recipe.columns) {
    if (!(SWEEP_COLUMNS as readonly string[]).includes(col)) {
      throw new SchemaError(`recipe ${recipe.id} references unknown column "${col}"`);
    }
  }
  const tables = new Map<string, SweepRow[]>();
  for (const name of recipe.inputs) {
    tables.set(name, loadTable(join(opts.dataDir, name)));
  }
  const svg = figureSvg(recipe.build(tables));
  mkdirSync(opts.outDir, { recursive: true });
  const out = join(opts.outDir, recipe.output);
  writeFileSync(out, svg);
  return out;
}
