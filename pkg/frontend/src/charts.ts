// Hand-rolled SVG charts. Geometry is scaled for display, but every piece
// of numeric TEXT put on screen is a value taken verbatim from an API
// payload (axis extremes are picked from the data, never computed).

const SVG_NS = "http://www.w3.org/2000/svg";

export const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

export interface SeriesPoint {
  label: string;
  value: number | null;
}

export interface Series {
  name: string;
  color: string;
  points: SeriesPoint[];
}

export interface LineChartOptions {
  width?: number;
  height?: number;
  zeroLine?: boolean;
  onZoom?: (fromLabel: string, toLabel: string) => void;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  doc: Document,
  tag: K,
): SVGElementTagNameMap[K] {
  return doc.createElementNS(SVG_NS, tag);
}

function definedValues(series: Series[]): number[] {
  const out: number[] = [];
  for (const s of series) {
    for (const p of s.points) {
      if (p.value !== null) out.push(p.value);
    }
  }
  return out;
}

export function lineChart(
  doc: Document,
  series: Series[],
  opts: LineChartOptions = {},
): SVGSVGElement {
  const width = opts.width ?? 860;
  const height = opts.height ?? 320;
  const margin = { top: 12, right: 16, bottom: 28, left: 64 };
  const innerW = width - margin.left - margin.right;
  const innerH = height - margin.top - margin.bottom;

  const svg = svgEl(doc, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "line-chart");

  const values = definedValues(series);
  const pointCount = Math.max(...series.map((s) => s.points.length), 0);
  if (values.length === 0 || pointCount === 0) {
    const note = svgEl(doc, "text");
    note.setAttribute("x", String(width / 2));
    note.setAttribute("y", String(height / 2));
    note.setAttribute("class", "chart-note");
    note.textContent = "no defined points in range";
    svg.appendChild(note);
    return svg;
  }

  // axis extremes are existing payload values, not derived numbers
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  const span = hi === lo ? 1 : hi - lo;
  const x = (i: number) =>
    margin.left + (pointCount === 1 ? innerW / 2 : (i / (pointCount - 1)) * innerW);
  const y = (v: number) => margin.top + innerH - ((v - lo) / span) * innerH;

  const plot = svgEl(doc, "g");
  svg.appendChild(plot);

  if (opts.zeroLine && lo < 0 && hi > 0) {
    const zero = svgEl(doc, "line");
    zero.setAttribute("x1", String(margin.left));
    zero.setAttribute("x2", String(margin.left + innerW));
    zero.setAttribute("y1", String(y(0)));
    zero.setAttribute("y2", String(y(0)));
    zero.setAttribute("class", "zero-line");
    plot.appendChild(zero);
  }

  for (const s of series) {
    let d = "";
    let pen = false;
    s.points.forEach((p, i) => {
      if (p.value === null) {
        pen = false; // UNDEFINED points break the line: gaps, never zeros
        return;
      }
      d += `${pen ? "L" : "M"}${x(i).toFixed(1)},${y(p.value).toFixed(1)}`;
      pen = true;
    });
    const path = svgEl(doc, "path");
    path.setAttribute("d", d);
    path.setAttribute("fill", "none");
    path.setAttribute("stroke", s.color);
    path.setAttribute("stroke-width", "1.6");
    path.setAttribute("data-series", s.name);
    plot.appendChild(path);
  }

  const yMax = svgEl(doc, "text");
  yMax.setAttribute("x", String(margin.left - 6));
  yMax.setAttribute("y", String(y(hi) + 4));
  yMax.setAttribute("class", "tick tick-y");
  yMax.textContent = String(hi);
  svg.appendChild(yMax);
  const yMin = svgEl(doc, "text");
  yMin.setAttribute("x", String(margin.left - 6));
  yMin.setAttribute("y", String(y(lo) + 4));
  yMin.setAttribute("class", "tick tick-y");
  yMin.textContent = String(lo);
  svg.appendChild(yMin);

  const first = series[0].points[0]?.label ?? "";
  const last = series[0].points[pointCount - 1]?.label ?? "";
  const x0 = svgEl(doc, "text");
  x0.setAttribute("x", String(margin.left));
  x0.setAttribute("y", String(height - 8));
  x0.setAttribute("class", "tick");
  x0.textContent = first;
  svg.appendChild(x0);
  const x1 = svgEl(doc, "text");
  x1.setAttribute("x", String(margin.left + innerW));
  x1.setAttribute("y", String(height - 8));
  x1.setAttribute("class", "tick tick-end");
  x1.textContent = last;
  svg.appendChild(x1);

  if (opts.onZoom) {
    attachZoom(doc, svg, series[0].points, margin.left, innerW, opts.onZoom);
  }
  return svg;
}

function attachZoom(
  doc: Document,
  svg: SVGSVGElement,
  points: SeriesPoint[],
  left: number,
  innerW: number,
  onZoom: (fromLabel: string, toLabel: string) => void,
): void {
  let dragStart: number | null = null;
  const band = svgEl(doc, "rect");
  band.setAttribute("class", "zoom-band");
  band.setAttribute("y", "0");
  band.setAttribute("height", "100%");
  band.setAttribute("display", "none");
  svg.appendChild(band);

  const toIndex = (clientX: number) => {
    const rect = svg.getBoundingClientRect();
    const width = rect.width || 1;
    const fraction = ((clientX - rect.left) * (left + innerW + 16)) / width;
    const i = Math.round(((fraction - left) / innerW) * (points.length - 1));
    return Math.max(0, Math.min(points.length - 1, i));
  };

  svg.addEventListener("mousedown", (ev) => {
    dragStart = (ev as MouseEvent).clientX;
    band.setAttribute("display", "");
  });
  svg.addEventListener("mousemove", (ev) => {
    if (dragStart === null) return;
    const cur = (ev as MouseEvent).clientX;
    band.setAttribute("x", String(Math.min(dragStart, cur)));
    band.setAttribute("width", String(Math.abs(cur - dragStart)));
  });
  svg.addEventListener("mouseup", (ev) => {
    if (dragStart === null) return;
    const a = toIndex(dragStart);
    const b = toIndex((ev as MouseEvent).clientX);
    dragStart = null;
    band.setAttribute("display", "none");
    if (a !== b) {
      const [i, j] = a < b ? [a, b] : [b, a];
      onZoom(points[i].label, points[j].label);
    }
  });
}

export function valueColor(value: number | null): string {
  if (value === null) return "#d0d0d0";
  const clamped = Math.max(-1, Math.min(1, value));
  const hue = clamped < 0 ? 215 : 8;
  const lightness = 97 - Math.abs(clamped) * 47;
  return `hsl(${hue}, 72%, ${lightness}%)`;
}

export function heatmapTable(
  doc: Document,
  persons: string[],
  values: (number | null)[][],
  onCell: (a: string, b: string) => void,
): HTMLTableElement {
  const table = doc.createElement("table");
  table.className = "heatmap";
  const head = doc.createElement("tr");
  head.appendChild(doc.createElement("th"));
  for (const p of persons) {
    const th = doc.createElement("th");
    th.textContent = p;
    head.appendChild(th);
  }
  table.appendChild(head);
  persons.forEach((rowPerson, i) => {
    const tr = doc.createElement("tr");
    const th = doc.createElement("th");
    th.textContent = rowPerson;
    tr.appendChild(th);
    persons.forEach((colPerson, j) => {
      const td = doc.createElement("td");
      const v = values[i][j];
      td.style.background = valueColor(v);
      td.textContent = v === null ? "" : v.toFixed(2);
      td.title = v === null ? `${rowPerson} / ${colPerson}: undefined` : `${rowPerson} / ${colPerson}`;
      if (i !== j) {
        td.className = "cell-link";
        td.dataset.a = rowPerson;
        td.dataset.b = colPerson;
        td.addEventListener("click", () => onCell(rowPerson, colPerson));
      }
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  return table;
}

export function scatterPlot(
  doc: Document,
  persons: string[],
  coords: [number, number][],
  opts: { width?: number; height?: number } = {},
): SVGSVGElement {
  const width = opts.width ?? 640;
  const height = opts.height ?? 420;
  const pad = 48;
  const svg = svgEl(doc, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "scatter");

  const xs = coords.map((c) => c[0]);
  const ys = coords.map((c) => c[1]);
  const xLo = Math.min(...xs);
  const xHi = Math.max(...xs);
  const yLo = Math.min(...ys);
  const yHi = Math.max(...ys);
  const xSpan = xHi === xLo ? 1 : xHi - xLo;
  const ySpan = yHi === yLo ? 1 : yHi - yLo;

  coords.forEach(([cx, cy], i) => {
    const px = pad + ((cx - xLo) / xSpan) * (width - 2 * pad);
    const py = height - pad - ((cy - yLo) / ySpan) * (height - 2 * pad);
    const dot = svgEl(doc, "circle");
    dot.setAttribute("cx", String(px));
    dot.setAttribute("cy", String(py));
    dot.setAttribute("r", "5");
    dot.setAttribute("fill", PALETTE[i % PALETTE.length]);
    dot.setAttribute("data-person", persons[i]);
    svg.appendChild(dot);
    const label = svgEl(doc, "text");
    label.setAttribute("x", String(px + 8));
    label.setAttribute("y", String(py + 4));
    label.setAttribute("class", "scatter-label");
    label.textContent = persons[i];
    svg.appendChild(label);
  });
  return svg;
}
