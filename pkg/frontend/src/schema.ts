import Papa from "papaparse";

// Pinned sweep CSV schema. Column order and spelling must match the producer
// exactly; anything else aborts with a per-column diagnostic instead of
// silently plotting the wrong quantity.
export const SWEEP_COLUMNS = [
  "g0",
  "gamma0",
  "g_tau",
  "gamma_tau",
  "beta",
  "C",
  "D",
  "S_irr",
  "ratio",
  "W",
  "dF",
  "lowT",
  "error",
] as const;

export type SweepColumn = (typeof SWEEP_COLUMNS)[number];

export interface SweepRow {
  g0: number;
  gamma0: number;
  g_tau: number;
  gamma_tau: number;
  beta: number; // Infinity for "inf" rows
  C: number;
  D: number; // already divided by beta when lowT is set
  S_irr: number; // same convention as D
  ratio: number | null; // empty on lowT rows
  W: number | null;
  dF: number | null;
  lowT: boolean;
  error: string; // "" for rows that evaluated cleanly
}

export class SchemaError extends Error {}

export function validateHeader(fields: readonly string[] | undefined, path: string): void {
  if (!fields || fields.length === 0) {
    throw new SchemaError(`${path}: empty CSV (no header row)`);
  }
  const problems: string[] = [];
  const n = Math.max(fields.length, SWEEP_COLUMNS.length);
  for (let i = 0; i < n; i++) {
    const want = SWEEP_COLUMNS[i];
    const got = fields[i];
    if (want === undefined) {
      problems.push(`column ${i + 1}: unexpected extra column "${got}"`);
    } else if (got === undefined) {
      problems.push(`column ${i + 1}: missing expected column "${want}"`);
    } else if (got !== want) {
      problems.push(`column ${i + 1}: expected "${want}", got "${got}"`);
    }
  }
  if (problems.length > 0) {
    throw new SchemaError(`${path}: header does not match the sweep schema:\n  ${problems.join("\n  ")}`);
  }
}

function parseNumber(raw: string, col: SweepColumn, line: number, path: string): number {
  const t = raw.trim();
  if (/^-?inf(inity)?$/i.test(t)) return t.startsWith("-") ? -Infinity : Infinity;
  const v = Number(t);
  if (t === "" || Number.isNaN(v)) {
    throw new SchemaError(`${path}: line ${line}: column "${col}" is not a number: "${raw}"`);
  }
  return v;
}

function parseOptional(raw: string, col: SweepColumn, line: number, path: string): number | null {
  if (raw.trim() === "") return null;
  return parseNumber(raw, col, line, path);
}

export function parseSweepCsv(text: string, path = "<csv>"): SweepRow[] {
  if (text.trim() === "") {
    throw new SchemaError(`${path}: empty CSV (no header row)`);
  }
  const parsed = Papa.parse<string[]>(text, { skipEmptyLines: true });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new SchemaError(`${path}: malformed CSV at row ${e.row ?? "?"}: ${e.message}`);
  }
  const records = parsed.data;
  if (records.length === 0) {
    throw new SchemaError(`${path}: empty CSV (no header row)`);
  }
  validateHeader(records[0], path);
  if (records.length === 1) {
    throw new SchemaError(`${path}: no data rows after the header`);
  }

  const rows: SweepRow[] = [];
  for (let i = 1; i < records.length; i++) {
    const rec = records[i];
    const line = i + 1;
    if (rec.length !== SWEEP_COLUMNS.length) {
      throw new SchemaError(
        `${path}: line ${line}: expected ${SWEEP_COLUMNS.length} fields, got ${rec.length}`,
      );
    }
    const error = rec[12].trim();
    const base = {
      g0: parseNumber(rec[0], "g0", line, path),
      gamma0: parseNumber(rec[1], "gamma0", line, path),
      g_tau: parseNumber(rec[2], "g_tau", line, path),
      gamma_tau: parseNumber(rec[3], "gamma_tau", line, path),
      beta: parseNumber(rec[4], "beta", line, path),
      lowT: rec[11].trim() === "1",
      error,
    };
    if (error !== "") {
      // failed rows keep their inputs; outputs are unusable
      rows.push({ ...base, C: NaN, D: NaN, S_irr: NaN, ratio: null, W: null, dF: null });
      continue;
    }
    rows.push({
      ...base,
      C: parseNumber(rec[5], "C", line, path),
      D: parseNumber(rec[6], "D", line, path),
      S_irr: parseNumber(rec[7], "S_irr", line, path),
      ratio: parseOptional(rec[8], "ratio", line, path),
      W: parseOptional(rec[9], "W", line, path),
      dF: parseOptional(rec[10], "dF", line, path),
    });
  }
  return rows;
}
