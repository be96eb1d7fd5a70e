// The four exploration views. Each renders exclusively from API payloads:
// no similarity/aggregation math happens here, and numeric text on screen
// is always a payload value (cells, axis extremes, echoed parameters).

import { Api, ApiError, CorrelationPayload } from "./api.js";
import { PALETTE, Series, heatmapTable, lineChart, scatterPlot } from "./charts.js";
import { ExplorationState } from "./state.js";

export interface ViewContext {
  doc: Document;
  api: Api;
  state: ExplorationState;
  navigate: (next: ExplorationState) => void;
  signal: AbortSignal;
}

function el(doc: Document, tag: string, className?: string, text?: string): HTMLElement {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function placeholder(doc: Document, message: string): HTMLElement {
  return el(doc, "p", "placeholder", message);
}

function errorNotice(doc: Document, err: unknown): HTMLElement {
  if (err instanceof ApiError) {
    return el(doc, "p", "api-error", `${err.code}: ${err.message}`);
  }
  return el(doc, "p", "api-error", String(err));
}

function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}

const N_CHOICES = [7, 30, 120];

function windowControl(ctx: ViewContext): HTMLElement {
  const wrap = el(ctx.doc, "label", "n-control", "window ");
  const select = ctx.doc.createElement("select");
  const choices = N_CHOICES.includes(ctx.state.n)
    ? N_CHOICES
    : [...N_CHOICES, ctx.state.n].sort((a, b) => a - b);
  for (const n of choices) {
    const opt = ctx.doc.createElement("option");
    opt.value = String(n);
    opt.textContent = `${n} days`;
    opt.selected = n === ctx.state.n;
    select.appendChild(opt);
  }
  select.addEventListener("change", () => {
    ctx.navigate({ ...ctx.state, n: Number(select.value) });
  });
  wrap.appendChild(select);
  return wrap;
}

async function mentionsView(container: HTMLElement, ctx: ViewContext): Promise<void> {
  const { doc, state } = ctx;
  if (state.persons.length === 0) {
    container.appendChild(placeholder(doc, "Pick at least one person to chart mentions."));
    return;
  }
  const payloads = await Promise.all(
    state.persons.map((p) => ctx.api.timeseries(p, state.from, state.to, ctx.signal)),
  );
  const series: Series[] = payloads.map((payload, i) => ({
    name: payload.person,
    color: PALETTE[i % PALETTE.length],
    points: payload.points.map((pt) => ({ label: pt.date, value: pt.count })),
  }));
  const legend = el(doc, "div", "legend");
  for (const s of series) {
    const item = el(doc, "span", "legend-item", s.name);
    item.style.borderColor = s.color;
    legend.appendChild(item);
  }
  container.appendChild(legend);
  container.appendChild(
    lineChart(doc, series, {
      onZoom: (from, to) => ctx.navigate({ ...ctx.state, from, to }),
    }),
  );
}

async function correlationView(container: HTMLElement, ctx: ViewContext): Promise<void> {
  const { doc, state } = ctx;
  if (state.persons.length !== 2) {
    container.appendChild(
      placeholder(doc, "Select exactly two persons to chart their similarity over time."),
    );
    return;
  }
  const [a, b] = state.persons;
  const payload: CorrelationPayload = await ctx.api.correlation(
    a, b, state.n, state.method, state.from, state.to, ctx.signal,
  );
  const meta = el(doc, "div", "view-meta");
  meta.appendChild(el(doc, "span", "meta-pair", `${payload.a} × ${payload.b}`));
  meta.appendChild(el(doc, "span", "meta-method", payload.method));
  const nBadge = el(doc, "span", "meta-n");
  nBadge.appendChild(el(doc, "span", undefined, "n="));
  nBadge.appendChild(el(doc, "span", "meta-n-value", String(payload.n)));
  meta.appendChild(nBadge);
  meta.appendChild(windowControl(ctx));
  container.appendChild(meta);
  const series: Series[] = [
    {
      name: `${payload.a}–${payload.b}`,
      color: PALETTE[0],
      points: payload.points.map((pt) => ({ label: pt.date, value: pt.value })),
    },
  ];
  container.appendChild(lineChart(doc, series, { zeroLine: true }));
}

async function matrixView(container: HTMLElement, ctx: ViewContext): Promise<void> {
  const { doc, state } = ctx;
  if (state.persons.length < 2) {
    container.appendChild(placeholder(doc, "Select at least two persons for a similarity matrix."));
    return;
  }
  const payload = await ctx.api.matrix(
    state.persons, state.n, state.method, state.to, ctx.signal,
  );
  const meta = el(doc, "div", "view-meta");
  meta.appendChild(el(doc, "span", "meta-method", payload.method));
  meta.appendChild(el(doc, "span", "meta-end", `window ending ${payload.end}`));
  container.appendChild(meta);
  // clicking a pair answers "how does this pair evolve?" in the next view
  container.appendChild(
    heatmapTable(doc, payload.persons, payload.values, (a, b) => {
      ctx.navigate({ ...ctx.state, persons: [a, b], view: "correlation" });
    }),
  );
  container.appendChild(
    el(doc, "p", "hint", "Grey cells are undefined (zero-variance window); click a cell for the pair over time."),
  );
}

async function mdsView(container: HTMLElement, ctx: ViewContext): Promise<void> {
  const { doc, state } = ctx;
  if (state.persons.length < 3) {
    container.appendChild(placeholder(doc, "Select at least three persons for a 2-D map."));
    return;
  }
  const payload = await ctx.api.mds(state.persons, state.n, state.to, ctx.signal);
  const meta = el(doc, "div", "view-meta");
  meta.appendChild(el(doc, "span", "meta-end", `window ending ${payload.end}`));
  const stress = el(doc, "span", "meta-stress");
  stress.appendChild(el(doc, "span", undefined, "stress "));
  stress.appendChild(el(doc, "span", "meta-stress-value", String(payload.stress)));
  meta.appendChild(stress);
  container.appendChild(meta);
  container.appendChild(scatterPlot(doc, payload.persons, payload.coords));
  if (payload.diagnostics.imputed_cells.length > 0) {
    const pairs = payload.diagnostics.imputed_cells
      .map(([a, b]) => `${a}/${b}`)
      .join(", ");
    container.appendChild(el(doc, "p", "hint", `Distances imputed for undefined pairs: ${pairs}`));
  }
}

const VIEWS = {
  mentions: mentionsView,
  correlation: correlationView,
  matrix: matrixView,
  mds: mdsView,
} as const;

export async function renderView(container: HTMLElement, ctx: ViewContext): Promise<void> {
  container.textContent = "";
  try {
    await VIEWS[ctx.state.view](container, ctx);
  } catch (err) {
    if (isAbort(err)) return; // superseded by a newer state
    container.textContent = "";
    container.appendChild(errorNotice(ctx.doc, err));
  }
}
