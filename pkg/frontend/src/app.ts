// DOM controller: renders server state and relays clicks back to the
// service. One mutation in flight at a time; stale responses are
// discarded by sequence number; rejected moves roll back to the last
// server-confirmed view.

import { ApiClient, ApiError } from './api.js';
import type { CreateGameRequest, GameView, MoveOption, Side } from './types.js';
import {
  BarModel,
  CutLine,
  buildBarModels,
  buildEvalPanel,
  buildRookBoard,
  describeMove,
  statusText,
} from './viewmodel.js';

const CELL = 44;
const SQUARE = 48;

type RenderMode = 'chocolate' | 'rooks';

export class App {
  private game: GameView | null = null;
  private moves: MoveOption[] = [];
  private mode: RenderMode = 'chocolate';
  private busy = false;
  private seq = 0;

  private readonly boardEl: HTMLElement;
  private readonly evalEl: HTMLElement;
  private readonly statusEl: HTMLElement;
  private readonly whatIfEl: HTMLElement;
  private readonly historyEl: HTMLElement;
  private readonly errorEl: HTMLElement;

  constructor(private readonly api: ApiClient, root: Document = document) {
    this.boardEl = root.getElementById('board')!;
    this.evalEl = root.getElementById('eval-panel')!;
    this.statusEl = root.getElementById('status')!;
    this.whatIfEl = root.getElementById('what-if')!;
    this.historyEl = root.getElementById('history')!;
    this.errorEl = root.getElementById('error')!;
  }

  setMode(mode: RenderMode): void {
    this.mode = mode;
    this.render();
  }

  async newGame(request: CreateGameRequest): Promise<void> {
    const seq = ++this.seq;
    this.busy = true;
    try {
      const game = await this.api.createGame(request);
      if (seq !== this.seq) return;
      this.game = game;
      await this.afterStateChange();
    } catch (error) {
      this.showError(error);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  /** Click handler for a legal cut: optimistic render, then confirm. */
  async selectAndPlay(cut: CutLine): Promise<void> {
    const game = this.game;
    if (!game || this.busy || game.terminal) return;
    if (game.to_move !== game.human_side) return;
    const seq = ++this.seq;
    this.busy = true;
    this.statusEl.textContent = 'Sending move...';
    this.renderPending(cut);
    try {
      const confirmed = await this.api.postMove(game.id, cut.component, cut.axis, cut.keep);
      if (seq !== this.seq) return;
      this.game = confirmed;
      await this.afterStateChange();
    } catch (error) {
      // 409/422: the server refused; fall back to its last view
      this.showError(error);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private async afterStateChange(): Promise<void> {
    const game = this.game!;
    this.moves = [];
    if (!game.terminal && game.to_move === game.engine_side) {
      this.render();
      const reply = await this.api.engineMove(game.id);
      this.game = reply;
    }
    const current = this.game!;
    if (!current.terminal && current.to_move === current.human_side) {
      this.moves = (await this.api.getMoves(current.id, current.human_side)).moves;
    }
  }

  showWhatIf(cut: CutLine | null): void {
    if (cut === null) {
      this.whatIfEl.textContent = '';
      return;
    }
    this.whatIfEl.textContent =
      `after ${cut.axis} keep ${cut.keep} in component ${cut.component}: ` +
      `total ${cut.resulting} (eats ${cut.eats})`;
    this.whatIfEl.title = String(cut.resultingDecimal);
  }

  private showError(error: unknown): void {
    const text =
      error instanceof ApiError ? `rejected (${error.status}): ${error.message}` : String(error);
    this.errorEl.textContent = text;
    window.setTimeout(() => {
      if (this.errorEl.textContent === text) this.errorEl.textContent = '';
    }, 4000);
  }

  // ----- rendering -----

  render(): void {
    const game = this.game;
    this.boardEl.replaceChildren();
    this.whatIfEl.textContent = '';
    if (!game) {
      this.statusEl.textContent = 'Pick a preset to start.';
      return;
    }
    if (this.mode === 'chocolate') {
      for (const bar of buildBarModels(game, this.moves)) {
        this.boardEl.appendChild(this.renderBar(bar));
      }
    } else {
      this.boardEl.appendChild(this.renderRooks(game));
    }
    this.renderEvalPanel(game);
    this.renderHistory(game);
    this.statusEl.textContent = statusText(game);
  }

  private renderPending(cut: CutLine): void {
    const element = this.boardEl.querySelector(
      `[data-cut="${cut.component}:${cut.axis}:${cut.keep}"]`,
    );
    element?.classList.add('pending');
  }

  private renderBar(bar: BarModel): HTMLElement {
    const wrapper = el('div', 'bar');
    const title = el('div', 'bar-title');
    title.textContent = `${bar.notation} = ${bar.value}`;
    title.title = String(bar.valueDecimal);
    wrapper.appendChild(title);

    const board = el('div', 'bar-grid');
    board.style.width = `${bar.columns * CELL}px`;
    board.style.height = `${bar.rows * CELL}px`;
    for (const row of bar.cells) {
      for (const cell of row) {
        const cellEl = el('div', `cell ${cell.color}`);
        cellEl.style.left = `${cell.column * CELL}px`;
        cellEl.style.top = `${(bar.rows - 1 - cell.row) * CELL}px`;
        cellEl.style.width = `${CELL}px`;
        cellEl.style.height = `${CELL}px`;
        board.appendChild(cellEl);
      }
    }
    for (const cut of bar.cuts) {
      const line = el('div', `cut-line ${cut.axis}`);
      line.dataset.cut = `${cut.component}:${cut.axis}:${cut.keep}`;
      if (cut.axis === 'vertical') {
        line.style.left = `${(cut.keep + 1) * CELL - 4}px`;
        line.style.top = '0px';
        line.style.height = `${bar.rows * CELL}px`;
      } else {
        line.style.top = `${(bar.rows - 1 - cut.keep) * CELL - 4}px`;
        line.style.left = '0px';
        line.style.width = `${bar.columns * CELL}px`;
      }
      line.addEventListener('click', () => void this.selectAndPlay(cut));
      line.addEventListener('mouseenter', () => this.showWhatIf(cut));
      line.addEventListener('mouseleave', () => this.showWhatIf(null));
      board.appendChild(line);
    }
    wrapper.appendChild(board);
    return wrapper;
  }

  private renderRooks(game: GameView): HTMLElement {
    const model = buildRookBoard(game, this.moves);
    const wrapper = el('div', 'rook-board');
    wrapper.style.width = `${model.files * SQUARE}px`;
    wrapper.style.height = `${model.ranks * SQUARE}px`;
    for (let y = 0; y < model.ranks; y++) {
      for (let x = 0; x < model.files; x++) {
        const square = el('div', `square ${model.darkSquare[y][x] ? 'dark' : 'light'}`);
        square.style.left = `${x * SQUARE}px`;
        square.style.top = `${(model.ranks - 1 - y) * SQUARE}px`;
        wrapper.appendChild(square);
      }
    }
    for (const target of model.targets) {
      const dot = el('div', 'target');
      dot.dataset.cut = `${target.component}:${target.cut.axis}:${target.cut.keep}`;
      dot.style.left = `${target.x * SQUARE + SQUARE / 2 - 7}px`;
      dot.style.top = `${(model.ranks - 1 - target.y) * SQUARE + SQUARE / 2 - 7}px`;
      dot.addEventListener('click', () => void this.selectAndPlay(target.cut));
      dot.addEventListener('mouseenter', () => this.showWhatIf(target.cut));
      dot.addEventListener('mouseleave', () => this.showWhatIf(null));
      wrapper.appendChild(dot);
    }
    for (const rook of model.rooks) {
      const piece = el('div', `rook ${rook.color}`);
      piece.textContent = '♜';
      piece.title = `component ${rook.component}: ${rook.value}`;
      piece.style.left = `${rook.x * SQUARE}px`;
      piece.style.top = `${(model.ranks - 1 - rook.y) * SQUARE}px`;
      wrapper.appendChild(piece);
    }
    return wrapper;
  }

  private renderEvalPanel(game: GameView): void {
    const panel = buildEvalPanel(game);
    this.evalEl.replaceChildren();
    const total = el('div', 'eval-total');
    total.textContent = `total ${panel.total}`;
    total.title = String(panel.totalDecimal);
    this.evalEl.appendChild(total);
    const outcome = el('div', 'eval-outcome');
    outcome.textContent = panel.outcomeText;
    this.evalEl.appendChild(outcome);
    for (const component of panel.components) {
      const row = el('div', 'eval-row');
      row.textContent = `${component.notation} = ${component.value}`;
      row.title = String(component.valueDecimal);
      this.evalEl.appendChild(row);
    }
  }

  private renderHistory(game: GameView): void {
    this.historyEl.replaceChildren();
    for (const entry of game.history) {
      const item = el('li', 'history-entry');
      item.textContent = describeMove(entry);
      this.historyEl.appendChild(item);
    }
  }
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}

export type { Side };
