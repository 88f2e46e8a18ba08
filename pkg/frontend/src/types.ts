// Payload shapes of the HTTP API. The client renders these verbatim;
// it never derives game legality or domination on its own.

export type Mode = 'general' | 'independent';

export interface GameStatePayload {
  n: number;
  placed: [number, number][];
  toMove: 'first' | 'second';
}

export interface VerdictPayload {
  winner: 'first' | 'second';
  nodes: number;
}

export interface GamePayload {
  id: string;
  state: GameStatePayload;
  legalMoves: [number, number][];
  engineMove: [number, number] | null;
  engineExact: boolean;
  over: boolean;
  winner: 'first' | 'second' | null;
  verdictIfKnown: VerdictPayload | null;
}

export interface MoveRejection {
  reason: 'occupied' | 'collinear' | 'out_of_range' | 'engine_turn';
  message?: string;
}

export interface SolutionPayload {
  kind: 'grid';
  n: number;
  mode: Mode;
  size: number;
  points: [number, number][];
  margin?: number;
  provenance?: string;
}

export interface SolutionsPayload {
  n: number;
  mode: Mode;
  minimum: number;
  distinct: number;
  classes: number;
  exhausted: boolean;
  witnesses: SolutionPayload[];
}

export interface DominatedPayload {
  n: number;
  points: [number, number][];
  dominated: [number, number][];
  count: number;
  isDominating: boolean;
}

export interface BoundsPayload {
  n: number;
  trivialLower: number;
  phiLower: number;
  constructionUpper: number;
}
