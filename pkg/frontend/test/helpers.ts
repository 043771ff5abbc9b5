/** Shared test plumbing: the recorded server exchanges and a fetch stub
 * that replays them. Any request the recording does not contain throws,
 * so the suite also proves the UI makes no other backend contact. */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { vi } from "vitest";

import type { AnalyzeResponse, GraphJson } from "../src/types.js";

export interface Exchange {
  method: string;
  path: string;
  body?: unknown;
  status: number;
  response: unknown;
}

const here = dirname(fileURLToPath(import.meta.url));

export const fixtures: Exchange[] = JSON.parse(
  readFileSync(join(here, "fixtures.json"), "utf8"),
) as Exchange[];

export const GOLDEN_TEXT =
  "6 10\n0 1\n0 2\n0 4\n1 2\n1 3\n1 4\n2 5\n3 4\n3 5\n4 5\n";

export const GOLDEN: GraphJson = {
  n: 6,
  edges: [
    [0, 1], [0, 2], [0, 4], [1, 2], [1, 3],
    [1, 4], [2, 5], [3, 4], [3, 5], [4, 5],
  ],
};

export const K2: GraphJson = { n: 2, edges: [[0, 1]] };

export const PATH22: GraphJson = {
  n: 22,
  edges: Array.from({ length: 21 }, (_, i) => [i, i + 1] as [number, number]),
};

/** Structural equality over JSON values (order-insensitive for objects). */
export function deepEqual(a: unknown, b: unknown): boolean {
  if (Object.is(a, b)) return true;
  if (typeof a !== typeof b || a === null || b === null) return false;
  if (Array.isArray(a) || Array.isArray(b)) {
    if (!Array.isArray(a) || !Array.isArray(b) || a.length !== b.length) {
      return false;
    }
    return a.every((item, i) => deepEqual(item, b[i]));
  }
  if (typeof a === "object") {
    const left = a as Record<string, unknown>;
    const right = b as Record<string, unknown>;
    const keys = Object.keys(left).sort();
    if (!deepEqual(keys, Object.keys(right).sort())) return false;
    return keys.every((k) => deepEqual(left[k], right[k]));
  }
  return false;
}

export function findFixture(
  method: string,
  path: string,
  predicate?: (e: Exchange) => boolean,
): Exchange {
  const hit = fixtures.find(
    (e) => e.method === method && e.path === path && (!predicate || predicate(e)),
  );
  if (!hit) throw new Error(`fixture not found: ${method} ${path}`);
  return hit;
}

/** The recorded analysis of a whole graph, for building states in tests. */
export function analysisOf(graph: GraphJson): AnalyzeResponse {
  const hit = findFixture("POST", "/api/v1/analyze", (e) =>
    deepEqual((e.body as { graph: unknown }).graph, graph),
  );
  return hit.response as AnalyzeResponse;
}

export interface RecordedCall {
  method: string;
  path: string;
  body: unknown;
}

export interface FixtureFetch {
  calls: RecordedCall[];
}

/** Replace global fetch with a replayer over the recorded exchanges. */
export function installFixtureFetch(): FixtureFetch {
  const calls: RecordedCall[] = [];
  const stub = async (
    input: RequestInfo | URL,
    init?: RequestInit,
  ): Promise<Response> => {
    const url =
      typeof input === "string"
        ? input
        : input instanceof URL
          ? input.toString()
          : input.url;
    const method = (init?.method ?? "GET").toUpperCase();
    const body =
      init?.body === undefined ? undefined : JSON.parse(init.body as string);
    calls.push({ method, path: url, body });
    const found = fixtures.find(
      (e) =>
        e.method === method &&
        e.path === url &&
        (method === "GET" || deepEqual(e.body, body)),
    );
    if (!found) {
      throw new Error(
        `no recorded exchange for ${method} ${url} ${JSON.stringify(body)}`,
      );
    }
    return new Response(JSON.stringify(found.response), {
      status: found.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  vi.stubGlobal("fetch", stub);
  return { calls };
}
