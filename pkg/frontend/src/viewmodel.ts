// Pure builders turning server JSON into render models. Everything
// shown on screen (colors, legality, evaluations) is taken verbatim
// from the service; nothing is recomputed here.

import type {
  AxisName,
  CellColorName,
  ComponentView,
  GameView,
  MoveOption,
  Side,
} from './types.js';

export interface CutLine {
  component: number;
  axis: AxisName;
  keep: number;
  /** exact resulting total, straight from GET /moves */
  resulting: string;
  resultingDecimal: number;
  eats: number;
}

export interface CellModel {
  column: number;
  row: number;
  color: CellColorName;
}

export interface BarModel {
  index: number;
  notation: string;
  columns: number;
  rows: number;
  value: string;
  valueDecimal: number;
  /** display order: top row first */
  cells: CellModel[][];
  cuts: CutLine[];
}

export interface EvalPanelModel {
  total: string;
  totalDecimal: number;
  outcomeText: string;
  components: { notation: string; value: string; valueDecimal: number }[];
}

export interface RookModel {
  component: number;
  color: 'black' | 'white';
  x: number;
  y: number;
  value: string;
}

export interface RookTargetModel {
  component: number;
  x: number;
  y: number;
  cut: CutLine;
}

export interface RookBoardModel {
  files: number;
  ranks: number;
  /** darkSquare[y][x], rank 0 at the bottom */
  darkSquare: boolean[][];
  rooks: RookModel[];
  targets: RookTargetModel[];
}

const OUTCOME_TEXT: Record<string, string> = {
  L: 'Left wins with correct play',
  R: 'Right wins with correct play',
  P: 'the player to move loses',
};

export function buildBarModel(component: ComponentView, moves: MoveOption[]): BarModel {
  const rows: CellModel[][] = [];
  for (let row = component.rows - 1; row >= 0; row--) {
    const cells: CellModel[] = [];
    for (let column = 0; column < component.columns; column++) {
      cells.push({ column, row, color: component.grid[row][column] });
    }
    rows.push(cells);
  }
  const cuts = moves
    .filter((move) => move.component === component.index)
    .map((move) => toCutLine(move));
  return {
    index: component.index,
    notation: component.notation,
    columns: component.columns,
    rows: component.rows,
    value: component.value,
    valueDecimal: component.value_decimal,
    cells: rows,
    cuts,
  };
}

function toCutLine(move: MoveOption): CutLine {
  return {
    component: move.component,
    axis: move.axis,
    keep: move.keep,
    resulting: move.resulting_value,
    resultingDecimal: move.resulting_decimal,
    eats: move.eats,
  };
}

/** Only legal lines exist in the model, so nothing else is clickable. */
export function buildBarModels(game: GameView, moves: MoveOption[]): BarModel[] {
  const usable = game.terminal ? [] : moves;
  return game.components.map((component) => buildBarModel(component, usable));
}

export function buildEvalPanel(game: GameView): EvalPanelModel {
  return {
    total: game.eval.total,
    totalDecimal: game.eval.total_decimal,
    outcomeText: `${game.eval.outcome}: ${OUTCOME_TEXT[game.eval.outcome]}`,
    components: game.eval.components.map((component) => ({
      notation: component.notation,
      value: component.value,
      valueDecimal: component.value_decimal,
    })),
  };
}

/**
 * The rook reading of the same game: component (n, m) is a rook at file
 * n, rank m; a positive bar is a black rook (dark squares play the blue
 * role, dark = even coordinate sum). Vertical cuts slide the rook left,
 * horizontal cuts slide it down.
 */
export function buildRookBoard(game: GameView, moves: MoveOption[]): RookBoardModel {
  const usable = game.terminal ? [] : moves;
  const rooks: RookModel[] = game.components.map((component) => ({
    component: component.index,
    color: component.sign === 1 ? 'black' : 'white',
    x: component.n,
    y: component.m,
    value: component.value,
  }));
  const files = Math.max(8, ...rooks.map((rook) => rook.x + 1));
  const ranks = Math.max(8, ...rooks.map((rook) => rook.y + 1));
  const darkSquare: boolean[][] = [];
  for (let y = 0; y < ranks; y++) {
    const rank: boolean[] = [];
    for (let x = 0; x < files; x++) {
      rank.push((x + y) % 2 === 0);
    }
    darkSquare.push(rank);
  }
  const targets: RookTargetModel[] = usable.map((move) => {
    const rook = rooks[move.component];
    return {
      component: move.component,
      x: move.axis === 'vertical' ? move.keep : rook.x,
      y: move.axis === 'horizontal' ? move.keep : rook.y,
      cut: toCutLine(move),
    };
  });
  return { files, ranks, darkSquare, rooks, targets };
}

export function statusText(game: GameView): string {
  if (game.terminal) {
    const winner = game.winner === game.human_side ? 'you win' : 'the engine wins';
    const stuck = game.to_move === 'L' ? 'Left' : 'Right';
    return `Game over: ${stuck} cannot move, ${winner}.`;
  }
  if (game.to_move === game.human_side) {
    return `Your move (${game.human_side === 'L' ? 'Left' : 'Right'}).`;
  }
  return 'Engine is thinking...';
}

export function describeMove(entry: { mover: Side; component: number; axis: AxisName; keep: number }): string {
  return `${entry.mover === 'L' ? 'Left' : 'Right'}: component ${entry.component}, ${entry.axis}, keep ${entry.keep}`;
}
