/**
 * Typed client for the polyent session API.
 *
 * The event stream is read with fetch + ReadableStream rather than
 * EventSource so the same code runs in the browser and in node tests;
 * reconnection resumes from the last sequence number seen.
 */

export interface StateJson {
  dims: number[];
  terms: { ket: number[]; re?: number; im?: number }[];
}

export interface InequalityJson {
  coeffs: string[];
  offset: string;
  provenance?: string;
}

export interface FlowOutcomeJson {
  reached: boolean;
  final_distance: number;
  closest_point?: number[];
  raw_inequality?: number[] | null;
  pretty_inequality?: string | null;
  suggested_inequality?: number[] | null;
  trajectory?: number[][];
  steps_taken?: number;
  exit_reason?: string;
}

export interface SessionSummary {
  id: string;
  dims: number[];
  status: string;
  counts: { expected: number; found: number; inequalities: number };
  last_seq: number;
}

export interface SessionView extends SessionSummary {
  vertices_found: string[][];
  vertices_expected: string[][];
  found_audit: { vertex: string[]; operator_asserted: boolean; distance?: number }[];
  inequalities: InequalityJson[];
  pending_vertex: string[] | null;
  last_outcome: FlowOutcomeJson | null;
  fail_reason?: string | null;
  initial_state?: StateJson;
}

export interface SicEventJson {
  seq: number;
  kind: string;
  payload: Record<string, unknown>;
  ts: number;
}

export interface CatalogItem {
  id: string;
  dims: number[];
  class_name: string;
  generic: boolean;
  state: StateJson;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorName: string,
    detail: string,
  ) {
    super(`${errorName}: ${detail}`);
  }
}

async function request<T>(base: string, method: string, path: string, body?: unknown): Promise<T> {
  const resp = await fetch(`${base}${path}`, {
    method,
    headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
    body: body !== undefined ? JSON.stringify(body) : undefined,
  });
  const data = await resp.json();
  if (!resp.ok) {
    throw new ApiError(resp.status, (data as any).error ?? "HttpError", (data as any).detail ?? "");
  }
  return data as T;
}

export class SessionApi {
  constructor(public base: string) {}

  catalog(): Promise<CatalogItem[]> {
    return request(this.base, "GET", "/catalog");
  }

  createSession(body: {
    state: StateJson;
    dims?: number[];
    seed?: number;
    generic_id?: string | boolean;
    options?: Record<string, unknown>;
  }): Promise<SessionSummary> {
    return request(this.base, "POST", "/sessions", body);
  }

  listSessions(): Promise<SessionSummary[]> {
    return request(this.base, "GET", "/sessions");
  }

  getSession(id: string): Promise<SessionView> {
    return request(this.base, "GET", `/sessions/${id}`);
  }

  step(id: string): Promise<SessionView> {
    return request(this.base, "POST", `/sessions/${id}/step`);
  }

  auto(id: string): Promise<SessionView> {
    return request(this.base, "POST", `/sessions/${id}/auto`);
  }

  considerFound(id: string): Promise<SessionView> {
    return request(this.base, "POST", `/sessions/${id}/consider-found`);
  }

  submitInequality(id: string, coeffs: (string | number)[], offset: string | number): Promise<SessionView> {
    return request(this.base, "POST", `/sessions/${id}/inequality`, { coeffs, offset });
  }

  /**
   * Read the SSE event stream from `since` (exclusive); calls onEvent for
   * every event and resolves when the server closes the stream (session
   * finished) or the signal aborts.  Returns the last sequence seen.
   */
  async streamEvents(
    id: string,
    since: number,
    onEvent: (ev: SicEventJson) => void,
    signal?: AbortSignal,
  ): Promise<number> {
    const resp = await fetch(`${this.base}/sessions/${id}/events?since=${since}`, { signal });
    if (!resp.ok || !resp.body) throw new ApiError(resp.status, "StreamError", "no body");
    const reader = resp.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    let last = since;
    for (;;) {
      const { done, value } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      let sep;
      while ((sep = buffer.indexOf("\n\n")) >= 0) {
        const chunk = buffer.slice(0, sep);
        buffer = buffer.slice(sep + 2);
        for (const line of chunk.split("\n")) {
          if (line.startsWith("data: ")) {
            const ev = JSON.parse(line.slice(6)) as SicEventJson;
            last = ev.seq;
            onEvent(ev);
          }
        }
      }
    }
    return last;
  }
}
