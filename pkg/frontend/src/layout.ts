/** Vertex placement: exact coordinates for grids, a deterministic seeded
 * force simulation for everything else — same seed, same picture. */

import type { GraphJson } from "./types.js";
import { neighbors } from "./state.js";

export interface Point {
  x: number;
  y: number;
}

export interface Box {
  width: number;
  height: number;
  pad: number;
}

export const DEFAULT_BOX: Box = { width: 520, height: 360, pad: 40 };

/** Row-major grid placement matching the generator's vertex order. */
export function gridLayout(rows: number, cols: number, box: Box = DEFAULT_BOX): Point[] {
  if (rows < 1 || cols < 1) throw new Error(`bad grid shape ${rows}x${cols}`);
  const innerW = box.width - 2 * box.pad;
  const innerH = box.height - 2 * box.pad;
  const points: Point[] = [];
  for (let r = 0; r < rows; r += 1) {
    for (let c = 0; c < cols; c += 1) {
      points.push({
        x: box.pad + (cols === 1 ? innerW / 2 : (c * innerW) / (cols - 1)),
        y: box.pad + (rows === 1 ? innerH / 2 : (r * innerH) / (rows - 1)),
      });
    }
  }
  return points;
}

/** Small fast deterministic PRNG (mulberry32). */
export function seededRandom(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** Spring-and-repulsion placement with seeded initial positions, run for a
 * fixed number of rounds so the result is a pure function of (graph, seed). */
export function forceLayout(
  graph: GraphJson,
  seed = 1,
  box: Box = DEFAULT_BOX,
  rounds = 160,
): Point[] {
  const n = graph.n;
  const rand = seededRandom(seed);
  const cx = box.width / 2;
  const cy = box.height / 2;
  if (n === 1) return [{ x: cx, y: cy }];

  // seeded start: a circle with jitter, so nothing ever coincides exactly
  const radius = Math.min(box.width, box.height) / 2 - box.pad;
  const points: Point[] = [];
  for (let v = 0; v < n; v += 1) {
    const angle = (2 * Math.PI * v) / n + (rand() - 0.5) * 0.4;
    const r = radius * (0.7 + 0.3 * rand());
    points.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }

  const adjacency = Array.from({ length: n }, (_, v) => neighbors(graph, v));
  const springLength = radius / Math.max(1, Math.sqrt(n - 1));
  const repulsion = springLength * springLength;

  for (let round = 0; round < rounds; round += 1) {
    const cooling = 1 - round / rounds;
    const fx = new Array<number>(n).fill(0);
    const fy = new Array<number>(n).fill(0);
    for (let v = 0; v < n; v += 1) {
      const pv = points[v]!;
      for (let u = v + 1; u < n; u += 1) {
        const pu = points[u]!;
        let dx = pv.x - pu.x;
        let dy = pv.y - pu.y;
        let dist2 = dx * dx + dy * dy;
        if (dist2 < 1e-6) {
          // never divide by zero: nudge deterministically
          dx = 1e-3 * (1 + v);
          dy = 1e-3 * (1 + u);
          dist2 = dx * dx + dy * dy;
        }
        const push = repulsion / dist2;
        fx[v]! += dx * push;
        fy[v]! += dy * push;
        fx[u]! -= dx * push;
        fy[u]! -= dy * push;
      }
      for (const u of adjacency[v]!) {
        if (u <= v) continue;
        const pu = points[u]!;
        const dx = pu.x - pv.x;
        const dy = pu.y - pv.y;
        const dist = Math.sqrt(dx * dx + dy * dy) || 1e-3;
        const pull = (dist - springLength) / dist;
        fx[v]! += dx * pull * 0.5;
        fy[v]! += dy * pull * 0.5;
        fx[u]! -= dx * pull * 0.5;
        fy[u]! -= dy * pull * 0.5;
      }
    }
    const step = 4 * cooling;
    for (let v = 0; v < n; v += 1) {
      const p = points[v]!;
      const norm = Math.sqrt(fx[v]! * fx[v]! + fy[v]! * fy[v]!) || 1;
      p.x += (fx[v]! / norm) * Math.min(norm, step);
      p.y += (fy[v]! / norm) * Math.min(norm, step);
      p.x = Math.min(box.width - box.pad, Math.max(box.pad, p.x));
      p.y = Math.min(box.height - box.pad, Math.max(box.pad, p.y));
    }
  }

  for (const p of points) {
    if (!Number.isFinite(p.x) || !Number.isFinite(p.y)) {
      throw new Error("layout produced a non-finite coordinate");
    }
  }
  return points;
}
