// Hand-written API payloads matching the service's wire format.

export const PERSONS = {
  from: "2016-01-01",
  to: "2016-12-25",
  persons: [
    { name: "Adler", total: 1642 },
    { name: "Berger", total: 1567 },
    { name: "Clasen", total: 301 },
  ],
};

export const TIMESERIES: Record<string, unknown> = {
  Adler: {
    person: "Adler",
    from: "2016-01-01",
    to: "2016-01-05",
    points: [
      { date: "2016-01-01", count: 5 },
      { date: "2016-01-02", count: 2 },
      { date: "2016-01-03", count: 6 },
      { date: "2016-01-04", count: 0 },
      { date: "2016-01-05", count: 1 },
    ],
  },
  Berger: {
    person: "Berger",
    from: "2016-01-01",
    to: "2016-01-05",
    points: [
      { date: "2016-01-01", count: 0 },
      { date: "2016-01-02", count: 1 },
      { date: "2016-01-03", count: 0 },
      { date: "2016-01-04", count: 2 },
      { date: "2016-01-05", count: 3 },
    ],
  },
};

export const CORRELATION = {
  a: "Adler",
  b: "Berger",
  n: 30,
  method: "pearson",
  from: "2016-01-01",
  to: "2016-01-05",
  points: [
    { date: "2016-01-03", value: -0.25 },
    { date: "2016-01-04", value: null },
    { date: "2016-01-05", value: 0.75 },
  ],
};

export const MATRIX = {
  persons: ["Adler", "Berger", "Clasen"],
  end: "2016-12-25",
  n: 30,
  method: "pearson",
  values: [
    [1.0, 0.8, null],
    [0.8, 1.0, -0.25],
    [null, -0.25, 1.0],
  ],
};

export const MDS = {
  persons: ["Adler", "Berger", "Clasen"],
  end: "2016-12-25",
  n: 30,
  coords: [
    [0.51, 0.12],
    [-0.33, 0.2],
    [-0.18, -0.32],
  ],
  stress: 1.2e-16,
  diagnostics: {
    eigenvalues: [0.7, 0.4, 0],
    imputed_cells: [["Adler", "Clasen"]],
  },
};

type FetchStub = (url: string, init?: RequestInit) => Promise<unknown>;

export interface MockServer {
  calls: string[];
  fetch: FetchStub;
}

function respond(status: number, payload: unknown) {
  return {
    ok: status < 400,
    status,
    statusText: "",
    json: async () => payload,
  };
}

export function mockServer(
  overrides: Record<string, { status: number; payload: unknown }> = {},
): MockServer {
  const calls: string[] = [];
  const stub: FetchStub = (url, init) =>
    new Promise((resolve, reject) => {
      const signal = init?.signal as AbortSignal | undefined;
      const fail = () => reject(new DOMException("aborted", "AbortError"));
      if (signal?.aborted) return fail();
      signal?.addEventListener("abort", fail);
      calls.push(url);
      const [path, qs] = url.split("?");
      const params = new URLSearchParams(qs ?? "");
      if (overrides[path]) {
        const { status, payload } = overrides[path];
        return resolve(respond(status, payload));
      }
      if (path === "/api/persons") return resolve(respond(200, PERSONS));
      if (path === "/api/timeseries") {
        const payload = TIMESERIES[params.get("person") ?? ""];
        return payload
          ? resolve(respond(200, payload))
          : resolve(respond(404, { error: "unknown_person", message: "unknown" }));
      }
      if (path === "/api/correlation") return resolve(respond(200, CORRELATION));
      if (path === "/api/matrix") return resolve(respond(200, MATRIX));
      if (path === "/api/mds") return resolve(respond(200, MDS));
      resolve(respond(404, { error: "not_found", message: path }));
    });
  return { calls, fetch: stub };
}

export function collectNumbers(value: unknown, into: Set<number> = new Set()): Set<number> {
  if (typeof value === "number") {
    into.add(value);
  } else if (Array.isArray(value)) {
    for (const v of value) collectNumbers(v, into);
  } else if (value !== null && typeof value === "object") {
    for (const v of Object.values(value)) collectNumbers(v, into);
  }
  return into;
}

export function renderedNumbers(root: Element): number[] {
  const doc = root.ownerDocument;
  const walker = doc.createTreeWalker(root, 4 /* NodeFilter.SHOW_TEXT */);
  const out: number[] = [];
  while (walker.nextNode()) {
    const text = walker.currentNode.textContent?.trim() ?? "";
    if (text && !Number.isNaN(Number(text))) {
      out.push(Number(text));
    }
  }
  return out;
}
