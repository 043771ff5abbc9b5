/** Thin typed client for the /api/v1 endpoints — the only backend contact. */

import type {
  AnalyzeResponse,
  GraphJson,
  GraphPayload,
  HintResponse,
  MoveResponse,
} from "./types.js";

export class ApiError extends Error {
  readonly status: number;
  /** "cap-exceeded" | "out-of-scope" on 422 responses, absent otherwise. */
  readonly verdict: string | null;

  constructor(status: number, detail: string, verdict: string | null = null) {
    super(detail);
    this.name = "ApiError";
    this.status = status;
    this.verdict = verdict;
  }
}

let baseUrl = "";

/** Point the client somewhere other than the serving origin. */
export function setBaseUrl(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

async function errorFrom(res: Response): Promise<ApiError> {
  let detail = `request failed: ${res.status}`;
  let verdict: string | null = null;
  try {
    const body = (await res.json()) as { detail?: unknown; verdict?: unknown };
    if (typeof body.detail === "string") detail = body.detail;
    if (typeof body.verdict === "string") verdict = body.verdict;
  } catch {
    // non-JSON error body; keep the status line
  }
  return new ApiError(res.status, detail, verdict);
}

async function postJson<T>(path: string, payload: unknown): Promise<T> {
  const res = await fetch(`${baseUrl}${path}`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
  });
  if (!res.ok) throw await errorFrom(res);
  return (await res.json()) as T;
}

async function getJson<T>(path: string): Promise<T> {
  const res = await fetch(`${baseUrl}${path}`);
  if (!res.ok) throw await errorFrom(res);
  return (await res.json()) as T;
}

export function analyzeGraph(graph: GraphPayload): Promise<AnalyzeResponse> {
  return postJson<AnalyzeResponse>("/api/v1/analyze", { graph });
}

export function requestMove(
  graph: GraphJson,
  configuration: string,
  vertex: number,
): Promise<MoveResponse> {
  return postJson<MoveResponse>("/api/v1/move", { graph, configuration, vertex });
}

export function requestHint(
  graph: GraphJson,
  configuration: string,
): Promise<HintResponse> {
  return postJson<HintResponse>("/api/v1/hint", { graph, configuration });
}

export function generateGraph(
  kind: string,
  params: number[],
  seed?: number,
): Promise<GraphJson> {
  let path = `/api/v1/generate?kind=${encodeURIComponent(kind)}&params=${params.join(",")}`;
  if (seed !== undefined) path += `&seed=${seed}`;
  return getJson<GraphJson>(path);
}
