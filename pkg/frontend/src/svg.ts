/** Small deterministic SVG plotting: fixed style, no timestamps, so the same
 * inputs always produce byte-identical images. */

export interface Series {
  x: number[];
  y: number[];
  label?: string;
  color?: string;
  dashed?: boolean;
  markers?: boolean;
  line?: boolean;
}

export interface AxisOptions {
  label?: string;
  log?: boolean;
}

export interface PanelOptions {
  title?: string;
  xAxis?: AxisOptions;
  yAxis?: AxisOptions;
  annotations?: string[];
  zeroLine?: boolean;
}

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"];
const FONT = "font-family=\"Helvetica, Arial, sans-serif\"";

function fmt(value: number): string {
  if (!isFinite(value)) return "0";
  return Number(value.toPrecision(6)).toString();
}

function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const raw = span / count;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = (norm < 1.5 ? 1 : norm < 3.5 ? 2 : norm < 7.5 ? 5 : 10) * mag;
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= hi + 1e-12 * span; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  const d0 = Math.floor(Math.log10(lo));
  const d1 = Math.ceil(Math.log10(hi));
  for (let d = d0; d <= d1; d += 1) {
    for (const m of [1, 2, 5]) {
      const v = m * Math.pow(10, d);
      if (v >= lo * 0.999 && v <= hi * 1.001) ticks.push(v);
    }
  }
  return ticks.length >= 2 ? ticks : [lo, hi];
}

export class Panel {
  series: Series[] = [];
  constructor(public options: PanelOptions = {}) {}

  add(series: Series): this {
    this.series.push(series);
    return this;
  }
}

/** Render stacked panels into one SVG document. */
export function renderSvg(panels: Panel[], width = 720, panelHeight = 300): string {
  const margin = { left: 72, right: 16, top: 34, bottom: 46 };
  const height = panelHeight * panels.length;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);

  panels.forEach((panel, index) => {
    const top = index * panelHeight + margin.top;
    const bottom = (index + 1) * panelHeight - margin.bottom;
    const left = margin.left;
    const right = width - margin.right;
    const opts = panel.options;
    const xLog = opts.xAxis?.log ?? false;
    const yLog = opts.yAxis?.log ?? false;

    const xs: number[] = [];
    const ys: number[] = [];
    for (const s of panel.series) {
      for (let i = 0; i < s.x.length; i += 1) {
        const xv = s.x[i];
        const yv = s.y[i];
        if (!isFinite(xv) || !isFinite(yv)) continue;
        if (xLog && xv <= 0) continue;
        if (yLog && yv <= 0) continue;
        xs.push(xv);
        ys.push(yv);
      }
    }
    if (xs.length === 0) {
      xs.push(0, 1);
      ys.push(0, 1);
    }
    let x0 = Math.min(...xs);
    let x1 = Math.max(...xs);
    let y0 = Math.min(...ys);
    let y1 = Math.max(...ys);
    if (opts.zeroLine && !yLog) {
      y0 = Math.min(y0, 0);
      y1 = Math.max(y1, 0);
    }
    const padLin = (lo: number, hi: number): [number, number] => {
      const span = hi - lo || Math.abs(hi) || 1;
      return [lo - 0.06 * span, hi + 0.06 * span];
    };
    const padLog = (lo: number, hi: number): [number, number] =>
      [lo / 1.25, hi * 1.25];
    [x0, x1] = xLog ? padLog(x0, x1) : padLin(x0, x1);
    [y0, y1] = yLog ? padLog(y0, y1) : padLin(y0, y1);

    const sx = (v: number): number => {
      const t = xLog
        ? (Math.log10(v) - Math.log10(x0)) / (Math.log10(x1) - Math.log10(x0))
        : (v - x0) / (x1 - x0);
      return left + t * (right - left);
    };
    const sy = (v: number): number => {
      const t = yLog
        ? (Math.log10(v) - Math.log10(y0)) / (Math.log10(y1) - Math.log10(y0))
        : (v - y0) / (y1 - y0);
      return bottom - t * (bottom - top);
    };

    // frame and title
    parts.push(
      `<rect x="${left}" y="${top}" width="${right - left}" height="${bottom - top}" ` +
        `fill="none" stroke="#444" stroke-width="1"/>`,
    );
    if (opts.title) {
      parts.push(
        `<text x="${(left + right) / 2}" y="${top - 12}" text-anchor="middle" ` +
          `${FONT} font-size="14">${escapeXml(opts.title)}</text>`,
      );
    }

    // ticks and labels
    const xTicks = xLog ? logTicks(x0, x1) : niceTicks(x0, x1);
    const yTicks = yLog ? logTicks(y0, y1) : niceTicks(y0, y1);
    for (const v of xTicks) {
      const px = sx(v);
      parts.push(`<line x1="${fmt(px)}" y1="${bottom}" x2="${fmt(px)}" y2="${bottom + 5}" stroke="#444"/>`);
      parts.push(
        `<text x="${fmt(px)}" y="${bottom + 18}" text-anchor="middle" ${FONT} ` +
          `font-size="11">${fmt(v)}</text>`,
      );
    }
    for (const v of yTicks) {
      const py = sy(v);
      parts.push(`<line x1="${left - 5}" y1="${fmt(py)}" x2="${left}" y2="${fmt(py)}" stroke="#444"/>`);
      parts.push(
        `<text x="${left - 8}" y="${fmt(py + 4)}" text-anchor="end" ${FONT} ` +
          `font-size="11">${fmt(v)}</text>`,
      );
    }
    if (opts.xAxis?.label) {
      parts.push(
        `<text x="${(left + right) / 2}" y="${bottom + 36}" text-anchor="middle" ` +
          `${FONT} font-size="12">${escapeXml(opts.xAxis.label)}</text>`,
      );
    }
    if (opts.yAxis?.label) {
      const cx = left - 48;
      const cy = (top + bottom) / 2;
      parts.push(
        `<text x="${cx}" y="${cy}" text-anchor="middle" ${FONT} font-size="12" ` +
          `transform="rotate(-90 ${cx} ${cy})">${escapeXml(opts.yAxis.label)}</text>`,
      );
    }
    if (opts.zeroLine && !yLog && y0 < 0 && y1 > 0) {
      parts.push(
        `<line x1="${left}" y1="${fmt(sy(0))}" x2="${right}" y2="${fmt(sy(0))}" ` +
          `stroke="#999" stroke-width="1" stroke-dasharray="2,3"/>`,
      );
    }

    // series
    panel.series.forEach((s, si) => {
      const color = s.color ?? PALETTE[si % PALETTE.length];
      const pts: string[] = [];
      for (let i = 0; i < s.x.length; i += 1) {
        const xv = s.x[i];
        const yv = s.y[i];
        if (!isFinite(xv) || !isFinite(yv)) continue;
        if ((xLog && xv <= 0) || (yLog && yv <= 0)) continue;
        pts.push(`${fmt(sx(xv))},${fmt(sy(yv))}`);
      }
      if ((s.line ?? true) && pts.length > 1) {
        const dash = s.dashed ? ' stroke-dasharray="6,4"' : "";
        parts.push(
          `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}" ` +
            `stroke-width="1.4"${dash}/>`,
        );
      }
      if (s.markers) {
        for (const p of pts) {
          const [px, py] = p.split(",");
          parts.push(`<circle cx="${px}" cy="${py}" r="3" fill="${color}"/>`);
        }
      }
      if (s.label) {
        const ly = top + 16 + 15 * si;
        parts.push(
          `<line x1="${right - 150}" y1="${ly - 4}" x2="${right - 126}" y2="${ly - 4}" ` +
            `stroke="${color}" stroke-width="2"${s.dashed ? ' stroke-dasharray="6,4"' : ""}/>`,
        );
        parts.push(
          `<text x="${right - 120}" y="${ly}" ${FONT} font-size="11">${escapeXml(s.label)}</text>`,
        );
      }
    });

    (opts.annotations ?? []).forEach((note, ni) => {
      parts.push(
        `<text x="${left + 10}" y="${top + 18 + 16 * ni}" ${FONT} font-size="12" ` +
          `fill="#222">${escapeXml(note)}</text>`,
      );
    });
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
