/** Client-side game state and its two hard invariants.
 *
 * All state lives here, not on the server: the board is a bitstring, the
 * history is the list of moves played, and undo is a local replay of that
 * history minus the last move. Two invariants are enforced on every
 * transition and throw InvariantError when violated:
 *
 *  - the move history always replays to the current configuration, and
 *  - the orbit-class badge, adopted from the first server response of a
 *    game, never changes across that game's moves.
 */

import type {
  AnalyzeResponse,
  GraphJson,
  HintResponse,
  MoveResponse,
} from "./types.js";

export class InvariantError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "InvariantError";
  }
}

export interface BoardState {
  graph: GraphJson;
  /** set when the graph came from the grid generator; drives layout */
  grid: { rows: number; cols: number } | null;
  /** current on/off assignment, vertex 0 leftmost */
  configuration: string;
  /** configuration this game started from */
  initial: string;
  /** vertices moved, in order, since `initial` */
  history: number[];
  /** conserved badge; null until first fetched, stays null out of scope */
  orbitClass: string | null;
  /** minimum light number from the closed-form analysis, if in scope */
  minLight: number | null;
  /** classification regime label, e.g. "orbit-theory" */
  regime: string;
  /** target weight reported by the last hint */
  targetWeight: number | null;
  /** vertex highlighted by the last hint, if any */
  hintMove: number | null;
  /** explanation when hints are unavailable (enumeration cap), else null */
  hintDisabled: string | null;
}

export function neighbors(graph: GraphJson, vertex: number): number[] {
  const out: number[] = [];
  for (const [u, v] of graph.edges) {
    if (u === vertex) out.push(v);
    else if (v === vertex) out.push(u);
  }
  return out;
}

export function isLit(configuration: string, vertex: number): boolean {
  return configuration[vertex] === "1";
}

export function onCount(configuration: string): number {
  let count = 0;
  for (const c of configuration) if (c === "1") count += 1;
  return count;
}

export function onVertices(configuration: string): number[] {
  const out: number[] = [];
  for (let v = 0; v < configuration.length; v += 1) {
    if (configuration[v] === "1") out.push(v);
  }
  return out;
}

/** The move rule, applied locally: a lit vertex toggles all its neighbors;
 * an unlit vertex does nothing. Used for undo and the replay invariant —
 * the server stays authoritative during play. */
export function applyMoveLocal(
  graph: GraphJson,
  configuration: string,
  vertex: number,
): string {
  if (!isLit(configuration, vertex)) return configuration;
  const chars = configuration.split("");
  for (const u of neighbors(graph, vertex)) {
    chars[u] = chars[u] === "1" ? "0" : "1";
  }
  return chars.join("");
}

export function replayHistory(
  graph: GraphJson,
  initial: string,
  moves: number[],
): string {
  let configuration = initial;
  for (const vertex of moves) {
    configuration = applyMoveLocal(graph, configuration, vertex);
  }
  return configuration;
}

export function newGame(
  analysis: AnalyzeResponse,
  configuration?: string,
): BoardState {
  const graph = analysis.graph;
  const start = configuration ?? "0".repeat(graph.n);
  if (start.length !== graph.n || !/^[01]*$/.test(start)) {
    throw new InvariantError(
      `configuration ${JSON.stringify(start)} does not fit a graph on ${graph.n} vertices`,
    );
  }
  return {
    graph,
    grid: null,
    configuration: start,
    initial: start,
    history: [],
    orbitClass: null,
    minLight: analysis.classification.min_light,
    regime: analysis.classification.applicable,
    targetWeight: null,
    hintMove: null,
    hintDisabled: null,
  };
}

function adoptOrAssertBadge(state: BoardState, reported: string | null): string | null {
  if (state.orbitClass === null) return reported;
  if (reported !== null && reported !== state.orbitClass) {
    throw new InvariantError(
      `orbit class changed from ${state.orbitClass} to ${reported}; ` +
        "moves must conserve it",
    );
  }
  return state.orbitClass;
}

export function applyMoveResponse(
  state: BoardState,
  vertex: number,
  response: MoveResponse,
): BoardState {
  if (!response.legal) {
    throw new InvariantError(
      `an illegal move at vertex ${vertex} reached the server`,
    );
  }
  const expected = applyMoveLocal(state.graph, state.configuration, vertex);
  if (response.configuration !== expected) {
    throw new InvariantError(
      `server answered ${response.configuration} where the move rule gives ${expected}`,
    );
  }
  const next: BoardState = {
    ...state,
    configuration: response.configuration,
    history: [...state.history, vertex],
    orbitClass: adoptOrAssertBadge(state, response.orbit_class),
    hintMove: null,
  };
  // the first invariant, re-checked end to end
  if (replayHistory(next.graph, next.initial, next.history) !== next.configuration) {
    throw new InvariantError("history no longer replays to the configuration");
  }
  return next;
}

export function applyHintResponse(
  state: BoardState,
  response: HintResponse,
): BoardState {
  return {
    ...state,
    orbitClass: adoptOrAssertBadge(state, response.orbit_class),
    targetWeight: response.target_weight,
    hintMove: response.already_minimal ? null : response.move,
    hintDisabled: null,
  };
}

/** Undo the last move by replaying everything before it, locally. */
export function undo(state: BoardState): BoardState {
  if (state.history.length === 0) return state;
  const history = state.history.slice(0, -1);
  return {
    ...state,
    configuration: replayHistory(state.graph, state.initial, history),
    history,
    hintMove: null,
  };
}

/** At the weight the last hint promised (or all-off): the game is over. */
export function atTarget(state: BoardState): boolean {
  const count = onCount(state.configuration);
  if (count === 0) return true;
  return state.targetWeight !== null && count === state.targetWeight;
}
