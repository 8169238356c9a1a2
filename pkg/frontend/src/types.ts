// Payload shapes of the chocgame HTTP service. The client renders these
// verbatim; it never computes values or legality itself.

export type Side = 'L' | 'R';
export type AxisName = 'vertical' | 'horizontal';
export type CellColorName = 'black' | 'blue' | 'red';

export interface ComponentView {
  index: number;
  notation: string;
  n: number;
  m: number;
  sign: 1 | -1;
  columns: number;
  rows: number;
  value: string;
  value_decimal: number;
  /** grid[row][column], row 0 at the bottom */
  grid: CellColorName[][];
}

export interface EvalView {
  total: string;
  total_decimal: number;
  outcome: 'L' | 'R' | 'P';
  components: { index: number; notation: string; value: string; value_decimal: number }[];
}

export interface HistoryEntry {
  mover: Side;
  component: number;
  axis: AxisName;
  keep: number;
}

export interface GameView {
  id: string;
  components: ComponentView[];
  eval: EvalView;
  to_move: Side | null;
  human_side: Side;
  engine_side: Side;
  terminal: boolean;
  winner: Side | null;
  history: HistoryEntry[];
  created: number;
  updated: number;
}

export interface EngineMoveView extends GameView {
  move: { component: number; axis: AxisName; keep: number };
}

export interface MoveOption {
  component: number;
  axis: AxisName;
  keep: number;
  resulting_value: string;
  resulting_decimal: number;
  eats: number;
}

export interface MovesView {
  player: Side;
  moves: MoveOption[];
}

export interface CreateGameRequest {
  bars?: string;
  rooks?: string;
  human_side: Side;
  first_mover: Side;
}
