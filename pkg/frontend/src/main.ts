/** DOM shell: wires the pure modules to the page. Kept as thin as
 * possible — everything interesting lives in state/render/controller and
 * is tested without a browser. */

import { GameController } from "./controller.js";
import { renderBoard } from "./render.js";
import { onCount } from "./state.js";
import type { BoardState } from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const boardHost = byId<HTMLDivElement>("board");
const statusLine = byId<HTMLDivElement>("status");
const graphText = byId<HTMLTextAreaElement>("graph-text");
const startConfig = byId<HTMLInputElement>("start-config");
const kindSelect = byId<HTMLSelectElement>("gen-kind");
const paramsInput = byId<HTMLInputElement>("gen-params");
const seedInput = byId<HTMLInputElement>("gen-seed");

function show(state: BoardState): void {
  boardHost.innerHTML = renderBoard(state);
  statusLine.textContent =
    `${state.graph.n} vertices, ${state.graph.edges.length} edges — ` +
    `${onCount(state.configuration)} lit, ${state.history.length} moves played`;
}

const controller = new GameController(show);

function report(err: unknown): void {
  statusLine.textContent = err instanceof Error ? err.message : String(err);
}

function startConfiguration(): string | undefined {
  const text = startConfig.value.trim();
  return text === "" ? undefined : text;
}

byId<HTMLButtonElement>("load-text").addEventListener("click", () => {
  controller.load({ text: graphText.value }, startConfiguration()).catch(report);
});

byId<HTMLButtonElement>("load-generated").addEventListener("click", () => {
  const params = paramsInput.value
    .split(",")
    .map((p) => p.trim())
    .filter((p) => p !== "")
    .map(Number);
  const seedText = seedInput.value.trim();
  const seed = seedText === "" ? undefined : Number(seedText);
  controller
    .loadGenerated(kindSelect.value, params, seed, startConfiguration())
    .catch(report);
});

byId<HTMLButtonElement>("hint").addEventListener("click", () => {
  controller.hint().catch(report);
});

byId<HTMLButtonElement>("undo").addEventListener("click", () => {
  try {
    controller.undoLast();
  } catch (err) {
    report(err);
  }
});

// one delegated listener; only lit vertices carry data-vertex at all
boardHost.addEventListener("click", (event) => {
  const target = (event.target as Element | null)?.closest("[data-vertex]");
  if (!target) return;
  const vertex = Number(target.getAttribute("data-vertex"));
  controller.clickVertex(vertex).catch(report);
});
