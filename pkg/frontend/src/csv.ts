import { readFileSync } from "fs";
import Papa from "papaparse";

export const SWEEP_COLUMNS = [
  "param", "e12", "e123", "e213", "e1323", "delta_e3", "g", "g3", "g4",
] as const;

export type SweepColumn = (typeof SWEEP_COLUMNS)[number];

export type SweepRow = Record<SweepColumn, number>;

/**
 * Load a sweep CSV produced by `cpmirror sweep` / `cpmirror figure`.
 * Throws if the file has no data rows or if a required column is missing.
 */
export function loadSweepCsv(path: string): SweepRow[] {
  const text = readFileSync(path, "utf-8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`CSV parse error in ${path}: ${first.message}`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const column of SWEEP_COLUMNS) {
    if (!fields.includes(column)) {
      throw new Error(`missing column: ${column}`);
    }
  }
  if (parsed.data.length === 0) {
    throw new Error(`empty CSV: ${path} has a header but no data rows`);
  }
  return parsed.data.map((record) => {
    const row = {} as SweepRow;
    for (const column of SWEEP_COLUMNS) {
      row[column] = Number(record[column]);
    }
    return row;
  });
}
