/** JSON shapes of the /api/v1 endpoints, mirrored from the service. */

export interface GraphJson {
  n: number;
  edges: [number, number][];
}

/** Request-side graph: inline n/edges, or the plain text file format. */
export type GraphPayload = GraphJson | { text: string };

export interface StructureJson {
  degrees: number[];
  bipartition: [number[], number[]] | null;
  cut_vertices: number[];
  blocks: number[][];
  claw_free: boolean;
  block_graph: boolean;
}

export interface OrbitSizesJson {
  zero: number;
  q0_nonzero: number;
  q1: number;
}

export interface ClassificationJson {
  n: number;
  nondegenerate: boolean;
  rank: number;
  line_graph: boolean;
  applicable: string;
  half_dim: number | null;
  arf: number | null;
  dual_q_values: number[] | null;
  min_light: number | null;
  one_lit: boolean | null;
  witness_q1: number[] | null;
  witness_q0: number[] | null;
  orbit_sizes: OrbitSizesJson | null;
  /** arbitrary precision, hence a string */
  group_order: string | null;
}

export interface AnalyzeResponse {
  graph: GraphJson;
  structure: StructureJson;
  classification: ClassificationJson;
}

export interface MoveResponse {
  configuration: string;
  on: number[];
  legal: boolean;
  changed: boolean;
  orbit_class: string | null;
}

export interface HintResponse {
  already_minimal: boolean;
  move: number | null;
  moves_remaining: number;
  target: string;
  target_weight: number;
  orbit_class: string | null;
}
