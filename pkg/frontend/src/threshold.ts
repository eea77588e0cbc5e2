/**
 * Threshold S-curve chart: success frequency vs perturbation edge count,
 * one series per property found in the results CSV, each with its Wilson
 * 95% confidence band, plus an optional predicted-threshold marker.
 */

import type { ResultRow } from "./csv.js";
import {
  type Frame,
  esc,
  fmt,
  makeLinearScale,
  niceTicks,
  openSvg,
  plotArea,
  renderAxes,
  verticalMarker,
} from "./svg.js";

export interface ThresholdChartOptions {
  predicted?: number;
  title?: string;
  width?: number;
  height?: number;
}

const PALETTE = ["#4361ee", "#e63946", "#2d6a4f", "#9d4edd", "#f77f00"];

export function buildThresholdChart(
  rows: ResultRow[],
  opts: ThresholdChartOptions = {},
): string {
  if (rows.length === 0) throw new Error("no result rows to plot");

  const byProperty = new Map<string, ResultRow[]>();
  for (const r of rows) {
    const list = byProperty.get(r.property) ?? [];
    list.push(r);
    byProperty.set(r.property, list);
  }
  for (const list of byProperty.values()) list.sort((a, b) => a.m - b.m);

  const frame: Frame = {
    width: opts.width ?? 640,
    height: opts.height ?? 360,
    marginLeft: 52,
    marginRight: 16,
    marginTop: 30,
    marginBottom: 44,
  };
  const { x0, y0, w, h } = plotArea(frame);

  const mMax = Math.max(...rows.map((r) => r.m), opts.predicted ?? 0) || 1;
  const sx = makeLinearScale(0, mMax, x0, x0 + w);
  const sy = makeLinearScale(0, 1, y0 + h, y0);

  const first = rows[0];
  const title =
    opts.title ??
    `Perturbed threshold, ${first.family} host, n=${first.n}, eta=${first.eta}`;

  let s = openSvg(frame, title);
  s += renderAxes(
    frame,
    sx,
    sy,
    niceTicks(0, mMax, 8),
    [0, 0.25, 0.5, 0.75, 1],
    "perturbation edges m",
    "success frequency",
    (v) => v.toFixed(2),
  );

  // 50% crossing guide
  s += `<line x1="${x0}" y1="${fmt(sy(0.5))}" x2="${x0 + w}" y2="${fmt(sy(0.5))}" stroke="#999" stroke-width="0.6" stroke-dasharray="2,3"/>\n`;

  let idx = 0;
  for (const [property, list] of byProperty) {
    const color = PALETTE[idx % PALETTE.length];
    const band = [
      ...list.map((r) => `${fmt(sx(r.m))},${fmt(sy(r.wilsonHi))}`),
      ...[...list].reverse().map((r) => `${fmt(sx(r.m))},${fmt(sy(r.wilsonLo))}`),
    ].join(" ");
    s += `<polygon class="wilson-band" fill="${color}" opacity="0.15" points="${band}"/>\n`;
    const line = list.map((r) => `${fmt(sx(r.m))},${fmt(sy(r.freq))}`).join(" ");
    s += `<polyline class="series-line" fill="none" stroke="${color}" stroke-width="1.4" points="${line}"/>\n`;
    for (const r of list) {
      s += `<circle class="series-point" cx="${fmt(sx(r.m))}" cy="${fmt(sy(r.freq))}" r="2" fill="${color}"/>\n`;
    }
    s += `<line x1="${x0 + w - 110}" y1="${y0 + 8 + idx * 12}" x2="${x0 + w - 96}" y2="${y0 + 8 + idx * 12}" stroke="${color}" stroke-width="1.4"/>\n`;
    s += `<text x="${x0 + w - 92}" y="${y0 + 11 + idx * 12}" font-size="8" fill="#444">${esc(property)}</text>\n`;
    idx++;
  }

  if (opts.predicted !== undefined) {
    s += verticalMarker(
      frame,
      sx(opts.predicted),
      "#333",
      `predicted m = ${opts.predicted}`,
      "predicted-line",
    );
  }

  s += "</svg>\n";
  return s;
}
