/**
 * Empirical CDF of the total sprinkle sample count Y per trial, with the
 * empirical mean and the theoretical mean bound 16*eta marked, and the
 * variance bound 112*eta quoted next to the empirical variance.
 */

import { type TraceRow, totalYPerTrial } from "./csv.js";
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

export interface YCdfChartOptions {
  title?: string;
  width?: number;
  height?: number;
}

export function buildYCdfChart(
  rows: TraceRow[],
  eta: number,
  opts: YCdfChartOptions = {},
): string {
  if (rows.length === 0) throw new Error("no trace rows to plot");
  if (!(eta > 0)) throw new Error("eta must be positive");

  const ys = [...totalYPerTrial(rows).values()].sort((a, b) => a - b);
  const trials = ys.length;
  const mean = ys.reduce((a, b) => a + b, 0) / trials;
  const variance =
    trials > 1
      ? ys.reduce((a, b) => a + (b - mean) * (b - mean), 0) / (trials - 1)
      : 0;
  const meanBound = 16 * eta;
  const varianceBound = 112 * eta;

  const frame: Frame = {
    width: opts.width ?? 640,
    height: opts.height ?? 360,
    marginLeft: 52,
    marginRight: 16,
    marginTop: 30,
    marginBottom: 44,
  };
  const { x0, y0, w, h } = plotArea(frame);

  const xMax = Math.max(...ys, meanBound) * 1.05 || 1;
  const sx = makeLinearScale(0, xMax, x0, x0 + w);
  const sy = makeLinearScale(0, 1, y0 + h, y0);

  let s = openSvg(
    frame,
    opts.title ?? `Sprinkle sample count Y over ${trials} trials, eta=${eta}`,
  );
  s += renderAxes(
    frame,
    sx,
    sy,
    niceTicks(0, xMax, 8),
    [0, 0.25, 0.5, 0.75, 1],
    "total samples Y",
    "empirical CDF",
    (v) => v.toFixed(2),
  );

  // right-continuous step function through (y_(i), i/trials)
  const pts: string[] = [`${fmt(sx(0))},${fmt(sy(0))}`];
  ys.forEach((y, i) => {
    pts.push(`${fmt(sx(y))},${fmt(sy(i / trials))}`);
    pts.push(`${fmt(sx(y))},${fmt(sy((i + 1) / trials))}`);
  });
  pts.push(`${fmt(sx(xMax))},${fmt(sy(1))}`);
  s += `<polyline class="cdf-line" fill="none" stroke="#4361ee" stroke-width="1.4" points="${pts.join(" ")}"/>\n`;

  s += verticalMarker(frame, sx(mean), "#e63946", `mean Y = ${mean.toFixed(1)}`, "mean-line");
  s += verticalMarker(frame, sx(meanBound), "#2d6a4f", `bound 16*eta = ${meanBound}`, "bound-line");
  s += `<text class="variance-note" x="${x0 + 6}" y="${y0 + h - 8}" font-size="8" fill="#555">${esc(
    `var(Y) = ${variance.toFixed(1)}  (bound 112*eta = ${varianceBound})`,
  )}</text>\n`;

  s += "</svg>\n";
  return s;
}
