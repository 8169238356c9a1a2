"""Sums of bars: totals, outcomes, optimal moves, and the rook encoding.

Every component is a number, so choosing a move never needs lookahead:
one ply of exact values decides everything.  The selection order when
several moves tie on resulting total follows endgame practice: play in
the component whose value has the finest denominator, and among equals
eat as much chocolate as possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from chocgame.chocolate import (
    Axis,
    Bar,
    Cut,
    NotationError,
    apply_cut,
    format_bar,
    legal_moves,
    parse_bar,
    squares_eaten,
    value,
)
from chocgame.dyadic import Dyadic
from chocgame.engine import Outcome, Player


class IllegalMoveError(ValueError):
    """The cut is not legal for the mover in that component."""


class WrongTurnError(ValueError):
    """A move was attempted out of turn."""


@dataclass(frozen=True)
class SumGame:
    """An ordered list of bars played as a disjunctive sum.

    Components that shrink to the bare poison square stay in the list
    (worth 0, no moves) so indices remain stable for the whole game.
    """

    bars: tuple[Bar, ...]
    to_move: Player | None = None

    def __str__(self) -> str:
        return format_sum(self)


@dataclass(frozen=True)
class SumMove:
    component: int
    cut: Cut


@dataclass(frozen=True)
class MoveEval:
    """One legal move with everything the selection rule looks at."""

    move: SumMove
    resulting: Dyadic
    eats: int


def sum_value(game: SumGame) -> Dyadic:
    total = Dyadic(0)
    for bar in game.bars:
        total = total + value(bar)
    return total


def sum_outcome(game: SumGame) -> Outcome:
    """Numbers decide outcomes by sign alone; N cannot occur."""
    v = sum_value(game)
    if v.sign > 0:
        return Outcome.L
    if v.sign < 0:
        return Outcome.R
    return Outcome.P


def sum_moves(game: SumGame, player: Player) -> list[SumMove]:
    """All legal moves, in component order then cut order."""
    return [
        SumMove(index, cut)
        for index, bar in enumerate(game.bars)
        for cut in legal_moves(bar, player)
    ]


def evaluate_moves(game: SumGame, player: Player) -> list[MoveEval]:
    """One-ply evaluation of every legal move against the exact total."""
    total = sum_value(game)
    evals = []
    for index, bar in enumerate(game.bars):
        old = value(bar)
        for cut in legal_moves(bar, player):
            resulting = total - old + value(apply_cut(bar, cut))
            evals.append(MoveEval(SumMove(index, cut), resulting, squares_eaten(bar, cut)))
    return evals


def best_move(game: SumGame, mover: Player) -> SumMove | None:
    """The move a perfect, greedy player makes; None when stuck.

    Primary criterion: maximize the resulting total for Left (minimize
    for Right).  Ties break by (1) moving in the component whose current
    value has the largest denominator exponent, (2) eating the most
    squares, (3) lowest component index, (4) vertical before horizontal,
    (5) smallest keep.
    """
    evals = evaluate_moves(game, mover)
    if not evals:
        return None

    def key(ev: MoveEval):
        resulting = -ev.resulting if mover is Player.LEFT else ev.resulting
        return (
            resulting,
            -value(game.bars[ev.move.component]).exponent,
            -ev.eats,
            ev.move.component,
            0 if ev.move.cut.axis is Axis.VERTICAL else 1,
            ev.move.cut.keep,
        )

    return min(evals, key=key).move


def play(game: SumGame, move: SumMove) -> SumGame:
    """Apply a move for the side to move; turn passes to the opponent."""
    if game.to_move is None:
        raise WrongTurnError("game has no side to move configured")
    if not 0 <= move.component < len(game.bars):
        raise IllegalMoveError(f"no component {move.component}")
    bar = game.bars[move.component]
    if move.cut not in legal_moves(bar, game.to_move):
        raise IllegalMoveError(
            f"{move.cut} is not a legal {game.to_move.name} move in {bar}"
        )
    bars = list(game.bars)
    bars[move.component] = apply_cut(bar, move.cut)
    return SumGame(tuple(bars), game.to_move.opponent)


# ----- chessboard rooks -----


class RookColor(Enum):
    BLACK = "black"
    WHITE = "white"


@dataclass(frozen=True)
class Rook:
    color: RookColor
    x: int
    y: int

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError(f"rook coordinates must be nonnegative: ({self.x}, {self.y})")


@dataclass(frozen=True)
class RookBoard:
    """Rooks that slide left or down only; several may share a square.

    dark_even fixes the board's parity convention: with the default,
    squares whose coordinates sum to an even number are the dark ones and
    dark plays the role of blue.
    """

    rooks: tuple[Rook, ...]
    dark_even: bool = True


def rooks_to_sum(board: RookBoard) -> SumGame:
    """Each rook at (x, y) is the bar (x, y); its sign comes from colors.

    A black rook is moved by Left onto dark squares.  Under dark = even
    coordinate sum that matches a +1 bar, where Left's cuts land on
    even-sum positions; so black maps to +1 and white to -1 (and both
    flip if the board declares dark = odd).
    """
    sign_for_black = 1 if board.dark_even else -1
    bars = tuple(
        Bar(rook.x, rook.y, sign_for_black if rook.color is RookColor.BLACK else -sign_for_black)
        for rook in board.rooks
    )
    return SumGame(bars)


# ----- text notation -----


def parse_sum(text: str) -> SumGame:
    """Whitespace-separated signed bars, e.g. "-(2,4) -(1,3) +(2,3)"."""
    bars = []
    for token in text.split():
        try:
            bars.append(parse_bar(token))
        except NotationError:
            raise NotationError(text, text.index(token), "expected [+|-](n,m)")
    return SumGame(tuple(bars))


def format_sum(game: SumGame) -> str:
    return " ".join(format_bar(bar) for bar in game.bars)


def parse_rooks(text: str) -> RookBoard:
    """One rook per line: "B x y" or "W x y"."""
    rooks = []
    offset = 0
    for line in text.splitlines():
        stripped = line.strip()
        if stripped:
            parts = stripped.split()
            if len(parts) != 3 or parts[0].upper() not in ("B", "W"):
                raise NotationError(text, offset, "expected 'B x y' or 'W x y'")
            color = RookColor.BLACK if parts[0].upper() == "B" else RookColor.WHITE
            try:
                rooks.append(Rook(color, int(parts[1]), int(parts[2])))
            except ValueError as exc:
                raise NotationError(text, offset, str(exc))
        offset += len(line) + 1
    return RookBoard(tuple(rooks))
