import type { CreateGameRequest, EngineMoveView, GameView, MovesView, Side } from './types.js';

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = (body as { detail?: string }).detail ?? response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

/** Thin typed wrapper over the game service; all state lives server-side. */
export class ApiClient {
  constructor(private readonly base: string = '') {}

  createGame(request: CreateGameRequest): Promise<GameView> {
    return this.post<GameView>('/games', request);
  }

  getGame(id: string): Promise<GameView> {
    return this.get<GameView>(`/games/${id}`);
  }

  getMoves(id: string, player: Side): Promise<MovesView> {
    return this.get<MovesView>(`/games/${id}/moves?player=${player}`);
  }

  postMove(id: string, component: number, axis: string, keep: number): Promise<GameView> {
    return this.post<GameView>(`/games/${id}/move`, { component, axis, keep });
  }

  engineMove(id: string): Promise<EngineMoveView> {
    return this.post<EngineMoveView>(`/games/${id}/engine-move`, null);
  }

  private async get<T>(path: string): Promise<T> {
    return asJson<T>(await fetch(this.base + path));
  }

  private async post<T>(path: string, payload: unknown): Promise<T> {
    return asJson<T>(
      await fetch(this.base + path, {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: payload === null ? null : JSON.stringify(payload),
      }),
    );
  }
}
