// Live-service integration: spawns the Python game service and drives
// the four-bar endgame preset through the API client and view models,
// exactly as the browser app would.

import { ChildProcess, spawn } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import type { GameView } from '../src/types.js';
import { buildBarModels, buildEvalPanel, buildRookBoard } from '../src/viewmodel.js';

const PORT = 8750 + Math.floor(Math.random() * 200);
const BASE = `http://127.0.0.1:${PORT}`;
const ENDGAME = '-(2,4) -(1,3) +(2,3) +(2,0)';

let server: ChildProcess;
const api = new ApiClient(BASE);

beforeAll(async () => {
  const journal = join(mkdtempSync(join(tmpdir(), 'chocgame-ui-')), 'journal.jsonl');
  const code =
    'import uvicorn; from chocgame.service import create_app; ' +
    `uvicorn.run(create_app(${JSON.stringify(journal)}), host="127.0.0.1", port=${PORT}, log_level="error")`;
  server = spawn('python3', ['-c', code], { stdio: 'inherit' });
  const deadline = Date.now() + 20_000;
  for (;;) {
    try {
      await fetch(`${BASE}/games/probe`);
      break; // any HTTP response means the server is up
    } catch {
      if (Date.now() > deadline) throw new Error('service did not start');
      await new Promise((resolve) => setTimeout(resolve, 150));
    }
  }
}, 30_000);

afterAll(() => {
  server?.kill();
});

describe('the four-bar endgame preset, human as Right', () => {
  let game: GameView;

  it('creates with the exact published evaluation', async () => {
    game = await api.createGame({ bars: ENDGAME, human_side: 'R', first_mover: 'L' });
    expect(game.eval.total).toBe('1/2^5');
    expect(game.eval.outcome).toBe('L');
    expect(game.eval.components.map((c) => c.value)).toEqual([
      '-21/2^5', '-1/2^1', '11/2^4', '1/2^1',
    ]);
  });

  it('shows the engine opening with the five-square column cut', async () => {
    const reply = await api.engineMove(game.id);
    expect(reply.move).toEqual({ component: 0, axis: 'vertical', keep: 1 });
    expect(reply.eval.total).toBe('0');
    game = reply;
  });

  it('annotates every human option with its exact what-if total', async () => {
    const moves = await api.getMoves(game.id, 'R');
    const models = buildBarModels(game, moves.moves);
    const allCuts = models.flatMap((bar) => bar.cuts);
    expect(allCuts.length).toBe(moves.moves.length);
    expect(allCuts.length).toBeGreaterThan(0);
    // the position is now worth 0, so every Right move leaves it >= 0
    // for Left... mover loses value: each resulting total is positive
    for (const cut of allCuts) {
      expect(cut.resulting.startsWith('-')).toBe(false);
      expect(cut.resulting).not.toBe('0');
    }
  });

  it('plays to completion and the engine (Left) wins', async () => {
    let state = game;
    for (let turn = 0; turn < 60 && !state.terminal; turn++) {
      if (state.to_move === 'R') {
        const moves = await api.getMoves(state.id, 'R');
        const pick = moves.moves[0];
        state = await api.postMove(state.id, pick.component, pick.axis, pick.keep);
      } else {
        state = await api.engineMove(state.id);
      }
    }
    expect(state.terminal).toBe(true);
    expect(state.winner).toBe('L');
    expect(buildBarModels(state, []).every((bar) => bar.cuts.length === 0)).toBe(true);
    game = state;
  });

  it('rejects play after the end with a conflict', async () => {
    await expect(api.postMove(game.id, 0, 'vertical', 0)).rejects.toMatchObject({ status: 409 });
  });
});

describe('the (2,3) preset', () => {
  it('renders the top-right cell with the color the ruleset dictates', async () => {
    const created = await api.createGame({ bars: '+(2,3)', human_side: 'L', first_mover: 'L' });
    const model = buildBarModels(created, [])[0];
    const topRight = model.cells[0][model.columns - 1];
    // served straight from the engine's coloring: odd coordinate sum is
    // blue (the same fact that legalizes Left's vertical cut to (1,3))
    expect(topRight.color).toBe(created.components[0].grid[3][2]);
    expect(topRight.color).toBe('blue');
    expect(created.components[0].grid[0]).toEqual(['black', 'blue', 'red']);
  });

  it('refuses an illegal cut, naming the color rule, and the view rolls back', async () => {
    const created = await api.createGame({ bars: '+(2,3)', human_side: 'L', first_mover: 'L' });
    await expect(api.postMove(created.id, 0, 'vertical', 0)).rejects.toMatchObject({
      status: 422,
      message: expect.stringContaining('blue'),
    });
    const after = await api.getGame(created.id);
    expect(after.history).toEqual([]); // nothing applied server-side
  });
});

describe('what-if previews in a zero game', () => {
  it('shows a negative total for every Left move', async () => {
    const created = await api.createGame({
      bars: '+(2,3) -(2,3)',
      human_side: 'L',
      first_mover: 'L',
    });
    expect(created.eval.total).toBe('0');
    const moves = await api.getMoves(created.id, 'L');
    expect(moves.moves.length).toBeGreaterThan(0);
    for (const move of moves.moves) {
      expect(move.resulting_value.startsWith('-')).toBe(true);
    }
  });
});

describe('the rook view of the endgame', () => {
  it('places black rooks on the positive bars and white on the mirrored ones', async () => {
    const created = await api.createGame({ bars: ENDGAME, human_side: 'R', first_mover: 'L' });
    const moves = await api.getMoves(created.id, 'L');
    const board = buildRookBoard(created, moves.moves);
    expect(board.rooks.map((rook) => [rook.color, rook.x, rook.y])).toEqual([
      ['white', 2, 4], ['white', 1, 3], ['black', 2, 3], ['black', 2, 0],
    ]);
    // Left's winning slide: the white rook at (2,4) left to file 1
    expect(board.targets.some((t) => t.component === 0 && t.x === 1 && t.y === 4)).toBe(true);
    const panel = buildEvalPanel(created);
    expect(panel.total).toBe('1/2^5');
  });
});
