/** Game flow: load → play (clicks, hints, undo) — one server request in
 * flight at a time, later actions queued behind it in arrival order.
 *
 * The orbit-class badge is fetched once per game, by the hint request made
 * at game start (which also seeds the target weight); every subsequent
 * move response is asserted against it in state.ts. Off-vertex clicks are
 * dropped here, before any request is formed.
 */

import { ApiError, analyzeGraph, generateGraph, requestHint, requestMove } from "./api.js";
import type { GraphPayload } from "./types.js";
import type { BoardState } from "./state.js";
import {
  applyHintResponse,
  applyMoveResponse,
  isLit,
  newGame,
  undo,
} from "./state.js";

export type StateListener = (state: BoardState) => void;

export class GameController {
  private current: BoardState | null = null;
  private queue: Promise<unknown> = Promise.resolve();
  private readonly listener: StateListener;

  constructor(listener: StateListener) {
    this.listener = listener;
  }

  get state(): BoardState | null {
    return this.current;
  }

  /** Serialize server work: at most one request in flight. */
  private enqueue<T>(job: () => Promise<T>): Promise<T> {
    const next = this.queue.then(job, job);
    this.queue = next.catch(() => undefined);
    return next;
  }

  private publish(state: BoardState): void {
    this.current = state;
    this.listener(state);
  }

  /** Analyze a graph and start a game from `configuration` (default: all
   * off). The initial hint fetches the conserved badge and target weight;
   * if the graph is over the solver cap, hints are disabled with the
   * server's explanation and play continues without them. */
  async load(graph: GraphPayload, configuration?: string): Promise<BoardState> {
    return this.enqueue(async () => {
      const analysis = await analyzeGraph(graph);
      let state = newGame(analysis, configuration);
      state = await this.fetchBadge(state);
      this.publish(state);
      return state;
    });
  }

  /** Generate a named graph server-side, then load it. Grid games remember
   * their shape so the board uses exact grid placement. */
  async loadGenerated(
    kind: string,
    params: number[],
    seed?: number,
    configuration?: string,
  ): Promise<BoardState> {
    return this.enqueue(async () => {
      const graph = await generateGraph(kind, params, seed);
      const analysis = await analyzeGraph(graph);
      let state = newGame(analysis, configuration);
      if (kind === "grid" && params.length === 2) {
        state = { ...state, grid: { rows: params[0]!, cols: params[1]! } };
      }
      state = await this.fetchBadge(state);
      this.publish(state);
      return state;
    });
  }

  private async fetchBadge(state: BoardState): Promise<BoardState> {
    try {
      const hint = await requestHint(state.graph, state.configuration);
      return applyHintResponse(state, hint);
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        return { ...state, hintDisabled: err.message };
      }
      throw err;
    }
  }

  /** Play a vertex. Off vertices are inert client-side: no request is made
   * and the state is returned unchanged. */
  async clickVertex(vertex: number): Promise<BoardState> {
    return this.enqueue(async () => {
      const state = this.requireState();
      if (!isLit(state.configuration, vertex)) {
        return state;
      }
      const response = await requestMove(state.graph, state.configuration, vertex);
      const next = applyMoveResponse(state, vertex, response);
      this.publish(next);
      return next;
    });
  }

  /** Ask the solver for the next move of a shortest solving sequence. */
  async hint(): Promise<BoardState> {
    return this.enqueue(async () => {
      const state = this.requireState();
      if (state.hintDisabled !== null) return state;
      try {
        const response = await requestHint(state.graph, state.configuration);
        const next = applyHintResponse(state, response);
        this.publish(next);
        return next;
      } catch (err) {
        if (err instanceof ApiError && err.status === 422) {
          const next = { ...state, hintDisabled: err.message };
          this.publish(next);
          return next;
        }
        throw err;
      }
    });
  }

  /** Local: replay history minus the last move. No server contact. */
  undoLast(): BoardState {
    const state = this.requireState();
    const next = undo(state);
    this.publish(next);
    return next;
  }

  private requireState(): BoardState {
    if (this.current === null) throw new Error("no game loaded");
    return this.current;
  }
}
