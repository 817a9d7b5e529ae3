/**
 * Dependency-free SVG chart builders. Pure functions from dataset rows to
 * SVG markup strings; the app injects the strings, tests assert on them.
 */

export interface Series {
  label: string;
  color: string;
  points: [number, number][];
  dashed?: boolean;
}

export interface Band {
  color: string;
  upper: [number, number][];
  lower: [number, number][];
}

export interface LineChartSpec {
  width?: number;
  height?: number;
  xLabel: string;
  yLabel: string;
  series: Series[];
  bands?: Band[];
  yLog?: boolean;
}

const MARGIN = { top: 12, right: 12, bottom: 36, left: 64 };

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  return [lo, hi];
}

function makeScale(domain: [number, number], range: [number, number], log: boolean) {
  const [d0, d1] = log ? [Math.log10(domain[0]), Math.log10(domain[1])] : domain;
  const span = d1 - d0 || 1;
  return (value: number) => {
    const v = log ? Math.log10(value) : value;
    return range[0] + ((v - d0) / span) * (range[1] - range[0]);
  };
}

function ticks(domain: [number, number], count: number, log: boolean): number[] {
  if (log) {
    const lo = Math.ceil(Math.log10(domain[0]));
    const hi = Math.floor(Math.log10(domain[1]));
    const result: number[] = [];
    for (let e = lo; e <= hi; e += Math.max(1, Math.floor((hi - lo) / count))) {
      result.push(10 ** e);
    }
    return result.length ? result : [domain[0], domain[1]];
  }
  const step = (domain[1] - domain[0]) / count;
  return Array.from({ length: count + 1 }, (_, i) => domain[0] + i * step);
}

function tickText(value: number): string {
  const magnitude = Math.abs(value);
  if (magnitude >= 1e6 || (magnitude > 0 && magnitude < 1e-3)) {
    return value.toExponential(0);
  }
  return String(Math.round(value * 100) / 100);
}

const esc = (text: string) => text.replace(/&/g, "&amp;").replace(/</g, "&lt;");

export function lineChart(spec: LineChartSpec): string {
  const width = spec.width ?? 560;
  const height = spec.height ?? 300;
  const innerW: [number, number] = [MARGIN.left, width - MARGIN.right];
  const innerH: [number, number] = [height - MARGIN.bottom, MARGIN.top];
  const xs = spec.series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = spec.series
    .flatMap((s) => s.points.map((p) => p[1]))
    .concat(spec.bands?.flatMap((b) => [...b.upper, ...b.lower].map((p) => p[1])) ?? []);
  const xDomain = extent(xs);
  const yDomain = extent(ys);
  const x = makeScale(xDomain, innerW, false);
  const y = makeScale(yDomain, innerH, spec.yLog ?? false);

  const parts: string[] = [];
  parts.push(
    `<svg viewBox="0 0 ${width} ${height}" class="chart" role="img" xmlns="http://www.w3.org/2000/svg">`,
  );
  for (const band of spec.bands ?? []) {
    const forward = band.upper.map(([px, py]) => `${x(px)},${y(py)}`);
    const backward = [...band.lower].reverse().map(([px, py]) => `${x(px)},${y(py)}`);
    parts.push(
      `<polygon class="band" fill="${band.color}" opacity="0.18" points="${forward.join(" ")} ${backward.join(" ")}"/>`,
    );
  }
  for (const tick of ticks(xDomain, 5, false)) {
    const px = x(tick);
    parts.push(
      `<line x1="${px}" y1="${innerH[0]}" x2="${px}" y2="${innerH[0] + 4}" stroke="#888"/>`,
      `<text x="${px}" y="${innerH[0] + 18}" text-anchor="middle" class="tick">${tickText(tick)}</text>`,
    );
  }
  for (const tick of ticks(yDomain, 4, spec.yLog ?? false)) {
    const py = y(tick);
    parts.push(
      `<line x1="${innerW[0] - 4}" y1="${py}" x2="${innerW[1]}" y2="${py}" stroke="#eee"/>`,
      `<text x="${innerW[0] - 8}" y="${py + 4}" text-anchor="end" class="tick">${tickText(tick)}</text>`,
    );
  }
  for (const series of spec.series) {
    const points = series.points.map(([px, py]) => `${x(px)},${y(py)}`).join(" ");
    const dash = series.dashed ? ' stroke-dasharray="5,4"' : "";
    parts.push(
      `<polyline class="series" data-label="${esc(series.label)}" fill="none" stroke="${series.color}" stroke-width="2"${dash} points="${points}"/>`,
    );
  }
  parts.push(
    `<text x="${(innerW[0] + innerW[1]) / 2}" y="${height - 4}" text-anchor="middle" class="axis">${esc(spec.xLabel)}</text>`,
    `<text transform="rotate(-90)" x="${-(innerH[0] + innerH[1]) / 2}" y="14" text-anchor="middle" class="axis">${esc(spec.yLabel)}</text>`,
    "</svg>",
  );
  return parts.join("");
}

export interface BarGroup {
  label: string;
  bars: { label: string; color: string; value: number; low: number; high: number }[];
}

export function groupedBarChart(groups: BarGroup[], yLabel: string): string {
  const width = 560;
  const height = 300;
  const innerW: [number, number] = [MARGIN.left, width - MARGIN.right];
  const innerH: [number, number] = [height - MARGIN.bottom, MARGIN.top];
  const values = groups.flatMap((g) => g.bars.flatMap((b) => [b.value, b.low, b.high]));
  const yDomain: [number, number] = [0, extent(values)[1] * 1.05];
  const y = makeScale(yDomain, innerH, false);
  const groupWidth = (innerW[1] - innerW[0]) / Math.max(groups.length, 1);
  const parts: string[] = [
    `<svg viewBox="0 0 ${width} ${height}" class="chart" role="img" xmlns="http://www.w3.org/2000/svg">`,
  ];
  for (const tick of ticks(yDomain, 4, false)) {
    const py = y(tick);
    parts.push(
      `<line x1="${innerW[0] - 4}" y1="${py}" x2="${innerW[1]}" y2="${py}" stroke="#eee"/>`,
      `<text x="${innerW[0] - 8}" y="${py + 4}" text-anchor="end" class="tick">${tickText(tick)}</text>`,
    );
  }
  groups.forEach((group, gi) => {
    const gx = innerW[0] + gi * groupWidth;
    const barWidth = (groupWidth * 0.8) / Math.max(group.bars.length, 1);
    group.bars.forEach((bar, bi) => {
      const bx = gx + groupWidth * 0.1 + bi * barWidth;
      const top = y(bar.value);
      parts.push(
        `<rect class="bar" data-label="${esc(group.label)}:${esc(bar.label)}" x="${bx}" y="${top}" width="${barWidth * 0.9}" height="${innerH[0] - top}" fill="${bar.color}"/>`,
      );
      const cx = bx + (barWidth * 0.9) / 2;
      parts.push(
        `<line class="whisker" x1="${cx}" y1="${y(bar.low)}" x2="${cx}" y2="${y(bar.high)}" stroke="#333" stroke-width="1.5"/>`,
        `<line x1="${cx - 4}" y1="${y(bar.low)}" x2="${cx + 4}" y2="${y(bar.low)}" stroke="#333"/>`,
        `<line x1="${cx - 4}" y1="${y(bar.high)}" x2="${cx + 4}" y2="${y(bar.high)}" stroke="#333"/>`,
      );
    });
    parts.push(
      `<text x="${gx + groupWidth / 2}" y="${innerH[0] + 18}" text-anchor="middle" class="tick">${esc(group.label)}</text>`,
    );
  });
  parts.push(
    `<text transform="rotate(-90)" x="${-(innerH[0] + innerH[1]) / 2}" y="14" text-anchor="middle" class="axis">${esc(yLabel)}</text>`,
    "</svg>",
  );
  return parts.join("");
}
