/**
 * Readers for the two CSV interfaces produced by the simulator CLI:
 * probe results (one row per frequency estimate) and sprinkle traces
 * (one row per boost round per trial).
 */

export interface ResultRow {
  family: string;
  n: number;
  d: number;
  eta: number;
  model: string;
  m: number;
  p: number;
  property: string;
  trials: number;
  successes: number;
  freq: number;
  wilsonLo: number;
  wilsonHi: number;
}

export interface TraceRow {
  trial: number;
  round: number;
  structureSize: number;
  boostSize: number;
  samples: number;
  hitU: number;
  hitV: number;
  totalY: number;
  outcome: string;
}

export const RESULT_HEADER =
  "family,n,d,eta,model,m,p,property,trials,successes,freq,wilson_lo,wilson_hi";
export const TRACE_HEADER =
  "trial,round,structure_size,boost_size,samples,hit_u,hit_v,total_Y,outcome";

function dataLines(text: string, expectedHeader: string): string[][] {
  const lines = text.trim().split("\n");
  if (lines.length === 0 || lines[0].trim() !== expectedHeader) {
    throw new Error(`unexpected CSV header: ${lines[0] ?? "(empty file)"}`);
  }
  // Repeated headers are tolerated so concatenated CSVs plot as one file.
  return lines
    .slice(1)
    .filter((l) => l.trim() !== "" && l.trim() !== expectedHeader)
    .map((l) => l.split(","));
}

function num(field: string, context: string): number {
  const v = Number(field);
  if (!Number.isFinite(v)) {
    throw new Error(`non-numeric field ${JSON.stringify(field)} in ${context}`);
  }
  return v;
}

export function parseResultsCsv(text: string): ResultRow[] {
  return dataLines(text, RESULT_HEADER).map((f, i) => {
    if (f.length !== 13) throw new Error(`results row ${i + 1} has ${f.length} fields`);
    const ctx = `results row ${i + 1}`;
    return {
      family: f[0],
      n: num(f[1], ctx),
      d: num(f[2], ctx),
      eta: num(f[3], ctx),
      model: f[4],
      m: num(f[5], ctx),
      p: num(f[6], ctx),
      property: f[7],
      trials: num(f[8], ctx),
      successes: num(f[9], ctx),
      freq: num(f[10], ctx),
      wilsonLo: num(f[11], ctx),
      wilsonHi: num(f[12], ctx),
    };
  });
}

export function parseTraceCsv(text: string): TraceRow[] {
  return dataLines(text, TRACE_HEADER).map((f, i) => {
    if (f.length !== 9) throw new Error(`trace row ${i + 1} has ${f.length} fields`);
    const ctx = `trace row ${i + 1}`;
    return {
      trial: num(f[0], ctx),
      round: num(f[1], ctx),
      structureSize: num(f[2], ctx),
      boostSize: num(f[3], ctx),
      samples: num(f[4], ctx),
      hitU: num(f[5], ctx),
      hitV: num(f[6], ctx),
      totalY: num(f[7], ctx),
      outcome: f[8],
    };
  });
}

/** Final total sample count Y per trial, in ascending trial order. */
export function totalYPerTrial(rows: TraceRow[]): Map<number, number> {
  const out = new Map<number, number>();
  for (const r of rows) {
    const prev = out.get(r.trial);
    if (prev === undefined || r.totalY > prev) out.set(r.trial, r.totalY);
  }
  return new Map([...out.entries()].sort((a, b) => a[0] - b[0]));
}
