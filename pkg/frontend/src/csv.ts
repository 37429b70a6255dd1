/** Minimal CSV handling for the simulator's published output schemas. */

export interface Table {
  header: string[];
  rows: string[][];
}

export class SchemaError extends Error {}

export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty CSV: no header row");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  const rows = lines.slice(1).map((line) => line.split(","));
  return { header, rows };
}

/** Validate that every named column exists; reports the exact difference. */
export function requireColumns(table: Table, names: string[]): void {
  const missing = names.filter((n) => !table.header.includes(n));
  if (missing.length > 0) {
    throw new SchemaError(
      `schema mismatch: missing columns [${missing.join(", ")}], ` +
        `file has [${table.header.join(", ")}]`,
    );
  }
  if (table.rows.length === 0) {
    throw new SchemaError("schema mismatch: no data rows");
  }
}

/** Numeric column by name; blank cells become NaN. */
export function column(table: Table, name: string): number[] {
  const idx = table.header.indexOf(name);
  if (idx < 0) {
    throw new SchemaError(`schema mismatch: missing column ${name}`);
  }
  return table.rows.map((row) => {
    const cell = (row[idx] ?? "").trim();
    return cell === "" ? NaN : Number(cell);
  });
}
