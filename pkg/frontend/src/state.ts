// Exploration state lives entirely in the URL query string, so any view
// is a shareable link and back/forward restores it exactly.

export type Method = "pearson" | "cosine";
export type View = "mentions" | "correlation" | "matrix" | "mds";

export interface ExplorationState {
  persons: string[];
  from: string | null; // ISO date; null = corpus default
  to: string | null;
  n: number;
  method: Method;
  view: View;
}

export const DEFAULT_N = 30;

export const DEFAULT_STATE: ExplorationState = {
  persons: [],
  from: null,
  to: null,
  n: DEFAULT_N,
  method: "pearson",
  view: "mentions",
};

const VIEWS: View[] = ["mentions", "correlation", "matrix", "mds"];

export function parseState(query: string | URLSearchParams): ExplorationState {
  const params = typeof query === "string" ? new URLSearchParams(query) : query;
  const persons = (params.get("p") ?? "")
    .split(",")
    .map((s) => s.trim())
    .filter((s) => s.length > 0);
  const n = Number.parseInt(params.get("n") ?? "", 10);
  const method = params.get("method") === "cosine" ? "cosine" : "pearson";
  const viewParam = params.get("view") as View | null;
  return {
    persons,
    from: params.get("from") || null,
    to: params.get("to") || null,
    n: Number.isFinite(n) && n >= 1 ? n : DEFAULT_N,
    method,
    view: viewParam && VIEWS.includes(viewParam) ? viewParam : "mentions",
  };
}

export function serializeState(state: ExplorationState): string {
  // fixed parameter order so equal states give byte-equal URLs
  const params = new URLSearchParams();
  if (state.persons.length > 0) params.set("p", state.persons.join(","));
  if (state.from) params.set("from", state.from);
  if (state.to) params.set("to", state.to);
  if (state.n !== DEFAULT_N) params.set("n", String(state.n));
  if (state.method !== "pearson") params.set("method", state.method);
  if (state.view !== "mentions") params.set("view", state.view);
  return params.toString();
}

export function statesEqual(a: ExplorationState, b: ExplorationState): boolean {
  return serializeState(a) === serializeState(b);
}
