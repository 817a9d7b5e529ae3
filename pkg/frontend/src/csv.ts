/**
 * RFC 4180 serialization of /figure payloads, matching the engine's own
 * CSV emission byte-for-byte (CRLF line endings, header row, Python float
 * repr for numeric cells) so a panel download equals the CLI output for
 * the same resolved parameters.
 */

import { reprFloat } from "./format.js";
import type { DatasetPayload } from "./types.js";

function csvCell(cell: string | number): string {
  const text = typeof cell === "number" ? reprFloat(cell) : cell;
  if (/[",\r\n]/.test(text)) {
    return `"${text.replace(/"/g, '""')}"`;
  }
  return text;
}

export function datasetToCsv(dataset: DatasetPayload): string {
  const lines = [dataset.columns.map(csvCell).join(",")];
  for (const row of dataset.rows) {
    lines.push(row.map(csvCell).join(","));
  }
  return lines.join("\r\n") + "\r\n";
}
