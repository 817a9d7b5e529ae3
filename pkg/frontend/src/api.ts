/**
 * API client. All numbers shown anywhere in the dashboard come through
 * here; nothing is recomputed client-side. Each operation keeps only its
 * newest in-flight request: when a slider moves twice quickly, the stale
 * response resolves to `undefined` and is discarded by the caller.
 */

import type { ApiEnvelope, FigureId, PresetInfo } from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    public readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Wrap an async function so only the newest call's result is delivered. */
export function latestOnly<A extends unknown[], R>(
  fn: (...args: A) => Promise<R>,
): (...args: A) => Promise<R | undefined> {
  let current = 0;
  return async (...args: A) => {
    const ticket = ++current;
    const result = await fn(...args);
    return ticket === current ? result : undefined;
  };
}

export class ApiClient {
  private figureLatest: Record<string, (body: Record<string, unknown>) => Promise<ApiEnvelope | undefined>> = {};
  private targetLatest;
  private lcohLatest;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {
    this.targetLatest = latestOnly((body: Record<string, unknown>) => this.post("/api/v1/target", body));
    this.lcohLatest = latestOnly((body: Record<string, unknown>) => this.post("/api/v1/lcoh", body));
  }

  private async post(path: string, body: Record<string, unknown>): Promise<ApiEnvelope> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = `${response.status}`;
      try {
        const payload = (await response.json()) as { detail?: string };
        if (payload.detail) detail = payload.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new ApiError(detail, response.status);
    }
    return (await response.json()) as ApiEnvelope;
  }

  async presets(): Promise<PresetInfo[]> {
    const response = await this.fetchImpl(this.baseUrl + "/api/v1/presets");
    if (!response.ok) throw new ApiError(`presets failed: ${response.status}`, response.status);
    const payload = (await response.json()) as { presets: PresetInfo[] };
    return payload.presets;
  }

  /** Newest-wins per figure id, so panels never regress to stale data. */
  figure(id: FigureId, body: Record<string, unknown>): Promise<ApiEnvelope | undefined> {
    if (!this.figureLatest[id]) {
      this.figureLatest[id] = latestOnly((b: Record<string, unknown>) =>
        this.post("/api/v1/figure", b),
      );
    }
    return this.figureLatest[id]!({ ...body, id });
  }

  target(body: Record<string, unknown>): Promise<ApiEnvelope | undefined> {
    return this.targetLatest(body);
  }

  lcoh(body: Record<string, unknown>): Promise<ApiEnvelope | undefined> {
    return this.lcohLatest(body);
  }

  project(body: Record<string, unknown>): Promise<ApiEnvelope> {
    return this.post("/api/v1/project", body);
  }
}
