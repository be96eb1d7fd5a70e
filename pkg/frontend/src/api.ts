// Typed client for the query API. The UI never computes similarity or
// totals itself; everything it shows comes back from these calls.

export interface PersonTotal {
  name: string;
  total: number;
}

export interface PersonsPayload {
  from: string;
  to: string;
  persons: PersonTotal[];
}

export interface TimeseriesPayload {
  person: string;
  from: string;
  to: string;
  points: { date: string; count: number }[];
}

export interface CorrelationPayload {
  a: string;
  b: string;
  n: number;
  method: string;
  from: string;
  to: string;
  points: { date: string; value: number | null }[];
}

export interface MatrixPayload {
  persons: string[];
  end: string;
  n: number;
  method: string;
  values: (number | null)[][];
}

export interface MdsPayload {
  persons: string[];
  end: string;
  n: number;
  coords: [number, number][];
  stress: number;
  diagnostics: { eigenvalues: number[]; imputed_cells: [string, string][] };
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

type Params = Record<string, string | number | undefined | null>;

export class Api {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string, params: Params, signal?: AbortSignal): Promise<T> {
    const search = new URLSearchParams();
    for (const [key, value] of Object.entries(params)) {
      if (value !== undefined && value !== null && value !== "") {
        search.set(key, String(value));
      }
    }
    const qs = search.toString();
    const url = `${this.base}${path}${qs ? `?${qs}` : ""}`;
    const resp = await fetch(url, { signal });
    const body = await resp.json();
    if (!resp.ok) {
      throw new ApiError(resp.status, body.error ?? "error", body.message ?? resp.statusText);
    }
    return body as T;
  }

  persons(
    opts: { q?: string; limit?: number; from?: string | null; to?: string | null },
    signal?: AbortSignal,
  ): Promise<PersonsPayload> {
    const range = opts.from && opts.to ? `${opts.from}:${opts.to}` : undefined;
    return this.get("/api/persons", { range, limit: opts.limit, q: opts.q }, signal);
  }

  timeseries(
    person: string,
    from: string | null,
    to: string | null,
    signal?: AbortSignal,
  ): Promise<TimeseriesPayload> {
    return this.get("/api/timeseries", { person, from, to }, signal);
  }

  correlation(
    a: string,
    b: string,
    n: number,
    method: string,
    from: string | null,
    to: string | null,
    signal?: AbortSignal,
  ): Promise<CorrelationPayload> {
    return this.get("/api/correlation", { a, b, n, method, from, to }, signal);
  }

  matrix(
    persons: string[],
    n: number,
    method: string,
    end: string | null,
    signal?: AbortSignal,
  ): Promise<MatrixPayload> {
    return this.get("/api/matrix", { persons: persons.join(","), n, method, end }, signal);
  }

  mds(
    persons: string[],
    n: number,
    end: string | null,
    signal?: AbortSignal,
  ): Promise<MdsPayload> {
    return this.get("/api/mds", { persons: persons.join(","), n, end }, signal);
  }
}
