import { describe, expect, it } from "vitest";
import { parseSweepCsv, SchemaError, SWEEP_COLUMNS } from "../src/schema.js";

const HEADER = SWEEP_COLUMNS.join(",");
const FINITE = "0.5,1,0.51,1,0.01,2.5e-09,2.5e-09,5e-09,0.5,1e-12,-5e-07,0,";
const LOWT = "1,1,1.01,1,inf,0.0024,9.8e-05,9.8e-05,,,,1,";

describe("parseSweepCsv", () => {
  it("round-trips finite rows", () => {
    const rows = parseSweepCsv(`${HEADER}\n${FINITE}\n`);
    expect(rows).toHaveLength(1);
    const r = rows[0];
    expect(r.g0).toBe(0.5);
    expect(r.g_tau).toBe(0.51);
    expect(r.beta).toBe(0.01);
    expect(r.C).toBe(2.5e-9);
    expect(r.ratio).toBe(0.5);
    expect(r.lowT).toBe(false);
    expect(r.error).toBe("");
  });

  it("maps inf rows to Infinity with empty optionals", () => {
    const r = parseSweepCsv(`${HEADER}\n${LOWT}\n`)[0];
    expect(r.beta).toBe(Infinity);
    expect(r.lowT).toBe(true);
    expect(r.ratio).toBeNull();
    expect(r.W).toBeNull();
    expect(r.dF).toBeNull();
  });

  it("keeps inputs and message on failed rows", () => {
    const row = '0.5,1,0.51,1,0.01,,,,,,,0,"boom, with comma"';
    const r = parseSweepCsv(`${HEADER}\n${row}\n`)[0];
    expect(r.error).toBe("boom, with comma");
    expect(r.g0).toBe(0.5);
    expect(Number.isNaN(r.C)).toBe(true);
  });

  it("rejects an empty file", () => {
    expect(() => parseSweepCsv("", "x.csv")).toThrow(SchemaError);
    expect(() => parseSweepCsv("", "x.csv")).toThrow(/empty CSV/);
  });

  it("rejects a header-only file", () => {
    expect(() => parseSweepCsv(`${HEADER}\n`, "x.csv")).toThrow(/no data rows/);
  });

  it("names the offending column on a renamed header", () => {
    const bad = HEADER.replace("ratio", "share");
    expect(() => parseSweepCsv(`${bad}\n${FINITE}\n`, "x.csv")).toThrow(
      /column 9: expected "ratio", got "share"/,
    );
  });

  it("names missing and extra columns", () => {
    const missing = SWEEP_COLUMNS.slice(0, -1).join(",");
    expect(() => parseSweepCsv(`${missing}\n${FINITE}\n`, "x.csv")).toThrow(
      /column 13: missing expected column "error"/,
    );
    expect(() => parseSweepCsv(`${HEADER},junk\n${FINITE},\n`, "x.csv")).toThrow(
      /column 14: unexpected extra column "junk"/,
    );
  });

  it("reports the line of a short row", () => {
    expect(() => parseSweepCsv(`${HEADER}\n${FINITE}\n1,2,3\n`, "x.csv")).toThrow(
      /line 3: expected 13 fields, got 3/,
    );
  });

  it("reports the column of a non-numeric value", () => {
    const row = FINITE.replace("2.5e-09,2.5e-09", "oops,2.5e-09");
    expect(() => parseSweepCsv(`${HEADER}\n${row}\n`, "x.csv")).toThrow(
      /column "C" is not a number/,
    );
  });
});
