/** Pure view: BoardState in, HTML string out. No DOM access here, so the
 * whole view is testable as plain strings; main.ts mounts the result. */

import type { BoardState } from "./state.js";
import { atTarget, isLit, onCount } from "./state.js";
import type { Point } from "./layout.js";
import { DEFAULT_BOX, forceLayout, gridLayout } from "./layout.js";

const VERTEX_RADIUS = 16;

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export type LayoutFn = (state: BoardState) => Point[];

export function defaultLayout(state: BoardState): Point[] {
  if (state.grid) return gridLayout(state.grid.rows, state.grid.cols);
  return forceLayout(state.graph);
}

/** Plain-text stand-in when layout fails: the adjacency list, still honest. */
export function renderFallback(state: BoardState): string {
  const lines = [`${state.graph.n} vertices`];
  for (const [u, v] of state.graph.edges) lines.push(`${u} — ${v}`);
  return `<pre class="board-fallback">${escapeHtml(lines.join("\n"))}</pre>`;
}

function badgeRow(state: BoardState): string {
  const count = onCount(state.configuration);
  const badges = [
    `<span class="badge on-count" data-on-count="${count}">on: ${count}</span>`,
    `<span class="badge orbit-class" data-orbit-class="${escapeHtml(
      state.orbitClass ?? "",
    )}">orbit class: ${escapeHtml(state.orbitClass ?? "—")}</span>`,
  ];
  if (state.minLight !== null) {
    badges.push(`<span class="badge min-light">min light: ${state.minLight}</span>`);
  } else {
    badges.push(`<span class="badge min-light">regime: ${escapeHtml(state.regime)}</span>`);
  }
  if (state.targetWeight !== null) {
    badges.push(
      `<span class="badge target-weight">target weight: ${state.targetWeight}</span>`,
    );
  }
  if (count === 0) {
    badges.push(`<span class="banner solved">solved — all lights out</span>`);
  } else if (atTarget(state)) {
    badges.push(`<span class="banner at-target">at the orbit minimum</span>`);
  }
  if (state.hintDisabled !== null) {
    badges.push(
      `<span class="banner hint-disabled">hints unavailable: ${escapeHtml(
        state.hintDisabled,
      )}</span>`,
    );
  }
  return `<div class="badges">${badges.join("")}</div>`;
}

function svgBoard(state: BoardState, points: Point[]): string {
  const parts: string[] = [
    `<svg viewBox="0 0 ${DEFAULT_BOX.width} ${DEFAULT_BOX.height}" class="board" role="img">`,
  ];
  for (const [u, v] of state.graph.edges) {
    const a = points[u]!;
    const b = points[v]!;
    parts.push(
      `<line x1="${a.x.toFixed(1)}" y1="${a.y.toFixed(1)}" ` +
        `x2="${b.x.toFixed(1)}" y2="${b.y.toFixed(1)}" class="edge"/>`,
    );
  }
  for (let v = 0; v < state.graph.n; v += 1) {
    const p = points[v]!;
    const lit = isLit(state.configuration, v);
    if (state.hintMove === v) {
      parts.push(
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" ` +
          `r="${VERTEX_RADIUS + 6}" class="hint-ring"/>`,
      );
    }
    // only lit vertices carry the data-vertex hook the click handler reads,
    // so an off vertex cannot even originate a move request
    const hook = lit ? ` data-vertex="${v}"` : "";
    parts.push(
      `<g class="vertex ${lit ? "lit" : "off"}"${hook}>` +
        `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${VERTEX_RADIUS}"/>` +
        `<text x="${p.x.toFixed(1)}" y="${(p.y + 4.5).toFixed(1)}" text-anchor="middle">${v}</text>` +
        `</g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

/** The whole board view; falls back to the adjacency list if layout fails. */
export function renderBoard(state: BoardState, layout: LayoutFn = defaultLayout): string {
  let board: string;
  try {
    board = svgBoard(state, layout(state));
  } catch {
    board = renderFallback(state);
  }
  return badgeRow(state) + board;
}
