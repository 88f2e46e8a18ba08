import type {
  DominatedPayload,
  GamePayload,
  Mode,
  MoveRejection,
  SolutionsPayload,
} from './types';

// Base prefix is empty when served by the API process itself; tests
// point it at a live server on another port.
let base = '';

export function setApiBase(url: string): void {
  base = url.replace(/\/$/, '');
}

class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(`API error ${status}`);
  }
}

export { ApiError };

async function getJson<T>(path: string): Promise<T> {
  const res = await fetch(base + path);
  const body = await res.json();
  if (!res.ok) throw new ApiError(res.status, body.detail);
  return body as T;
}

async function postJson<T>(path: string, payload: unknown): Promise<T> {
  const res = await fetch(base + path, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(payload),
  });
  const body = await res.json();
  if (!res.ok) throw new ApiError(res.status, body.detail);
  return body as T;
}

export function createGame(
  n: number,
  engine: 'first' | 'second' | 'none',
): Promise<GamePayload> {
  return postJson('/api/game', { n, engine });
}

export function getGame(id: string): Promise<GamePayload> {
  return getJson(`/api/game/${id}`);
}

export type MoveResult =
  | { ok: true; game: GamePayload }
  | { ok: false; rejection: MoveRejection };

export async function postMove(
  id: string,
  x: number,
  y: number,
): Promise<MoveResult> {
  try {
    const game = await postJson<GamePayload>(`/api/game/${id}/move`, { x, y });
    return { ok: true, game };
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      return { ok: false, rejection: err.detail as MoveRejection };
    }
    throw err;
  }
}

export function getSolutions(n: number, mode: Mode): Promise<SolutionsPayload> {
  return getJson(`/api/solutions?n=${n}&mode=${mode}`);
}

export function getDominated(
  n: number,
  points: [number, number][],
): Promise<DominatedPayload> {
  const enc = points.map(([x, y]) => `${x},${y}`).join(';');
  return getJson(`/api/dominated?n=${n}&points=${encodeURIComponent(enc)}`);
}
