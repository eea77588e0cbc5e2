/** Small deterministic SVG helpers shared by the two chart builders. */

export function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Fixed-precision coordinate formatting keeps output byte-stable. */
export function fmt(v: number): string {
  return v.toFixed(2);
}

export type Scale = (v: number) => number;

export function makeLinearScale(
  domMin: number,
  domMax: number,
  rangeMin: number,
  rangeMax: number,
): Scale {
  const span = domMax - domMin || 1;
  return (v: number) => rangeMin + ((v - domMin) / span) * (rangeMax - rangeMin);
}

export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((s) => s >= rough) ?? rough;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step * 0.01; v += step) {
    ticks.push(v);
  }
  return ticks;
}

export interface Frame {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export function plotArea(f: Frame): { x0: number; y0: number; w: number; h: number } {
  return {
    x0: f.marginLeft,
    y0: f.marginTop,
    w: f.width - f.marginLeft - f.marginRight,
    h: f.height - f.marginTop - f.marginBottom,
  };
}

export function openSvg(f: Frame, title: string): string {
  const { x0, y0 } = plotArea(f);
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${f.width} ${f.height}"` +
    ` font-family="Helvetica, Arial, sans-serif">\n` +
    `<rect width="${f.width}" height="${f.height}" fill="#fff"/>\n` +
    `<text x="${x0}" y="${y0 - 8}" font-size="11" font-weight="600" fill="#222">` +
    `${esc(title)}</text>\n`
  );
}

export function renderAxes(
  f: Frame,
  sx: Scale,
  sy: Scale,
  xTicks: number[],
  yTicks: number[],
  xLabel: string,
  yLabel: string,
  yFormat: (v: number) => string = String,
): string {
  const { x0, y0, w, h } = plotArea(f);
  let s = "";
  for (const v of yTicks) {
    const y = sy(v);
    s += `<line x1="${x0}" y1="${fmt(y)}" x2="${x0 + w}" y2="${fmt(y)}" stroke="#eee" stroke-width="0.5"/>\n`;
    s += `<text x="${x0 - 5}" y="${fmt(y + 3)}" text-anchor="end" font-size="8" fill="#555">${esc(yFormat(v))}</text>\n`;
  }
  for (const v of xTicks) {
    const x = sx(v);
    s += `<line x1="${fmt(x)}" y1="${y0 + h}" x2="${fmt(x)}" y2="${y0 + h + 3}" stroke="#333" stroke-width="0.5"/>\n`;
    s += `<text x="${fmt(x)}" y="${y0 + h + 13}" text-anchor="middle" font-size="8" fill="#555">${esc(String(v))}</text>\n`;
  }
  s += `<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y0 + h}" stroke="#333" stroke-width="0.8"/>\n`;
  s += `<line x1="${x0}" y1="${y0 + h}" x2="${x0 + w}" y2="${y0 + h}" stroke="#333" stroke-width="0.8"/>\n`;
  s += `<text x="${x0 + w / 2}" y="${f.height - 6}" text-anchor="middle" font-size="9" fill="#333">${esc(xLabel)}</text>\n`;
  s += `<text x="14" y="${y0 + h / 2}" text-anchor="middle" font-size="9" fill="#333" transform="rotate(-90,14,${y0 + h / 2})">${esc(yLabel)}</text>\n`;
  return s;
}

export function verticalMarker(
  f: Frame,
  x: number,
  color: string,
  label: string,
  cssClass: string,
): string {
  const { y0, h } = plotArea(f);
  return (
    `<line class="${cssClass}" x1="${fmt(x)}" y1="${y0}" x2="${fmt(x)}" y2="${y0 + h}"` +
    ` stroke="${color}" stroke-width="1" stroke-dasharray="5,3"/>\n` +
    `<text class="${cssClass}-label" x="${fmt(x + 3)}" y="${y0 + 10}" font-size="8"` +
    ` fill="${color}">${esc(label)}</text>\n`
  );
}
