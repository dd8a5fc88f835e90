export interface Series {
  label: string;
  points: [number, number][];
}

const WIDTH = 720;
const HEIGHT = 480;
const MARGIN = { top: 40, right: 24, bottom: 52, left: 76 };
const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

interface Scale {
  (v: number): number;
  ticks: number[];
}

/** Tick positions at a 1/2/5 step covering [lo, hi], like common plot axes. */
export function niceTicks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) {
    return [lo];
  }
  const raw = (hi - lo) / count;
  const power = Math.pow(10, Math.floor(Math.log10(raw)));
  const candidates = [1, 2, 5, 10].map((m) => m * power);
  const step = candidates.find((c) => c >= raw) ?? candidates[3];
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function makeScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  if (hi === lo) {
    lo -= 1;
    hi += 1;
  }
  const span = hi - lo;
  const fn = ((v: number) => outLo + ((v - lo) / span) * (outHi - outLo)) as Scale;
  fn.ticks = niceTicks(lo, hi);
  return fn;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 1e4 || abs < 1e-3) return v.toExponential(1);
  return String(parseFloat(v.toPrecision(6)));
}

function px(v: number): string {
  return v.toFixed(2);
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function pathFor(points: [number, number][], x: Scale, y: Scale): string {
  const parts: string[] = [];
  let pen = false;
  for (const [xv, yv] of points) {
    if (!Number.isFinite(xv) || !Number.isFinite(yv)) {
      pen = false;
      continue;
    }
    parts.push(`${pen ? "L" : "M"}${px(x(xv))},${px(y(yv))}`);
    pen = true;
  }
  return parts.join(" ");
}

/** Deterministic standalone SVG: axes, zero line, one path per series, legend. */
export function buildSvg(series: Series[], xLabel: string, yLabel: string, title: string): string {
  const finite = series.flatMap((s) => s.points.filter((p) => Number.isFinite(p[0]) && Number.isFinite(p[1])));
  if (finite.length === 0) {
    throw new Error("nothing to plot: no finite data points");
  }
  const xs = finite.map((p) => p[0]);
  const ys = finite.map((p) => p[1]);
  const x = makeScale(Math.min(...xs), Math.max(...xs), MARGIN.left, WIDTH - MARGIN.right);
  const yLo = Math.min(...ys, 0);
  const yHi = Math.max(...ys, 0);
  const pad = 0.05 * (yHi - yLo || 1);
  const y = makeScale(yLo - pad, yHi + pad, HEIGHT - MARGIN.bottom, MARGIN.top);

  const out: string[] = [];
  out.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`);
  out.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  out.push(`<text x="${px(WIDTH / 2)}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">${escapeXml(title)}</text>`);

  const axisY = HEIGHT - MARGIN.bottom;
  for (const t of x.ticks) {
    const gx = px(x(t));
    out.push(`<line x1="${gx}" y1="${MARGIN.top}" x2="${gx}" y2="${axisY}" stroke="#dddddd" stroke-width="1"/>`);
    out.push(`<text x="${gx}" y="${axisY + 18}" text-anchor="middle" font-family="sans-serif" font-size="12">${fmtTick(t)}</text>`);
  }
  for (const t of y.ticks) {
    const gy = px(y(t));
    out.push(`<line x1="${MARGIN.left}" y1="${gy}" x2="${WIDTH - MARGIN.right}" y2="${gy}" stroke="#dddddd" stroke-width="1"/>`);
    out.push(`<text x="${MARGIN.left - 8}" y="${gy}" text-anchor="end" dominant-baseline="middle" font-family="sans-serif" font-size="12">${fmtTick(t)}</text>`);
  }
  if (yLo < 0 && yHi > 0) {
    const zero = px(y(0));
    out.push(`<line x1="${MARGIN.left}" y1="${zero}" x2="${WIDTH - MARGIN.right}" y2="${zero}" stroke="#888888" stroke-width="1"/>`);
  }
  out.push(`<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${WIDTH - MARGIN.left - MARGIN.right}" height="${axisY - MARGIN.top}" fill="none" stroke="#333333" stroke-width="1"/>`);

  series.forEach((s, i) => {
    const d = pathFor(s.points, x, y);
    out.push(`<path d="${d}" fill="none" stroke="${PALETTE[i % PALETTE.length]}" stroke-width="1.8"/>`);
  });

  series.forEach((s, i) => {
    const ly = MARGIN.top + 16 + 18 * i;
    const lx = WIDTH - MARGIN.right - 150;
    out.push(`<line x1="${lx}" y1="${ly - 4}" x2="${lx + 26}" y2="${ly - 4}" stroke="${PALETTE[i % PALETTE.length]}" stroke-width="1.8"/>`);
    out.push(`<text x="${lx + 32}" y="${ly}" font-family="sans-serif" font-size="12">${escapeXml(s.label)}</text>`);
  });

  out.push(`<text x="${px((MARGIN.left + WIDTH - MARGIN.right) / 2)}" y="${HEIGHT - 12}" text-anchor="middle" font-family="sans-serif" font-size="13">${escapeXml(xLabel)}</text>`);
  out.push(`<text x="18" y="${px((MARGIN.top + axisY) / 2)}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 18 ${px((MARGIN.top + axisY) / 2)})">${escapeXml(yLabel)}</text>`);
  out.push("</svg>");
  return out.join("\n") + "\n";
}
