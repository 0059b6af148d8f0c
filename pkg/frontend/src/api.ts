/**
 * Typed client for the sublinks HTTP service.
 *
 * Endpoints: GET /api/health, POST /api/reduce, POST /api/sublink.
 * Error responses carry {"detail": {"error": <name>, "detail": <message>}}
 * and are surfaced as ApiError with both fields preserved.
 */

import type { Matrix } from "./state.js";

export interface HealthResponse {
  status: string;
  convention: string;
}

export interface WireWord {
  strands: number;
  letters: number[];
}

export interface ReduceStats {
  letters: number;
  crossings: number;
  components: number;
  size: number;
}

export interface ReduceResponse {
  word: WireWord;
  pd: unknown;
  linking: Matrix;
  svg: string | null;
  stats: ReduceStats;
}

export interface SublinkResponse {
  independent: boolean;
  trivial: "TRUE" | "FALSE" | "UNKNOWN";
  peel_order?: number[];
  failure_residual?: number[];
  svg_highlighted?: string;
}

export interface Api {
  health(): Promise<HealthResponse>;
  reduce(adj: Matrix, svg?: boolean): Promise<ReduceResponse>;
  sublink(adj: Matrix, subset: number[], svg?: boolean): Promise<SublinkResponse>;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly errorName: string,
    detail: string,
  ) {
    super(`${errorName}: ${detail}`);
  }
}

export class ApiClient implements Api {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  async health(): Promise<HealthResponse> {
    const res = await this.fetchFn(`${this.baseUrl}/api/health`);
    return (await this.unwrap(res)) as HealthResponse;
  }

  async reduce(adj: Matrix, svg = true): Promise<ReduceResponse> {
    return (await this.post("/api/reduce", { graph: { adj }, svg })) as ReduceResponse;
  }

  async sublink(adj: Matrix, subset: number[], svg = true): Promise<SublinkResponse> {
    return (await this.post("/api/sublink", {
      graph: { adj },
      subset,
      svg,
    })) as SublinkResponse;
  }

  private async post(path: string, body: unknown): Promise<unknown> {
    const res = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return this.unwrap(res);
  }

  private async unwrap(res: Response): Promise<unknown> {
    if (res.ok) return res.json();
    let name = "HttpError";
    let detail = `${res.status} ${res.statusText}`;
    try {
      const payload = (await res.json()) as { detail?: { error?: string; detail?: string } };
      if (payload.detail?.error) name = payload.detail.error;
      if (payload.detail?.detail) detail = payload.detail.detail;
    } catch {
      // non-JSON error body: keep the status-line fallback
    }
    throw new ApiError(res.status, name, detail);
  }
}
