"""The partisan chocolate-bar ruleset.

A bar (n, m) is an (n+1) x (m+1) grid of squares with the poisoned
square at the bottom-left corner (0, 0) and a checkerboard coloring in
which the squares orthogonally next to the poison are blue.  A cut
removes whole columns from the right or whole rows from the top; who may
make which cut is governed by the color of the square just beyond the
cut line.  Bars with the mirrored coloring are carried as sign -1 and
behave as the negative.

The closed-form value rule lives here (``value``); the game-tree
expansion ``bar_tree`` bridges to the brute-force oracle in ``engine``
so the two routes can be checked against each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from chocgame.dyadic import Dyadic
from chocgame.engine import GameTree, Player
from chocgame.hackenbush import hackenbush_value


class OutOfBoundsError(IndexError):
    """Cell coordinates outside the bar."""


class IllegalCutError(ValueError):
    """A cut that does not shrink the bar."""


class CellColor(Enum):
    BLACK = "black"
    BLUE = "blue"
    RED = "red"


class Axis(Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass(frozen=True, order=True)
class Cut:
    """A cut described by the dimension that remains afterwards.

    Vertical cuts keep columns 0..keep, horizontal cuts keep rows
    0..keep.  Storing the surviving extent (not the number of removed
    lines) keeps the encoding unambiguous for both axes and parities.
    """

    axis: Axis
    keep: int


@dataclass(frozen=True)
class Bar:
    """A signed bar: n = columns - 1, m = rows - 1, sign -1 for the
    mirrored coloring."""

    n: int
    m: int
    sign: int = 1

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError(f"bar dimensions must be nonnegative: ({self.n}, {self.m})")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def columns(self) -> int:
        return self.n + 1

    @property
    def rows(self) -> int:
        return self.m + 1

    @property
    def squares(self) -> int:
        return self.columns * self.rows

    def __str__(self) -> str:
        return format_bar(self)


def cell_color(bar: Bar, i: int, j: int) -> CellColor:
    """Color of cell (column i, row j); the poison cell is black.

    For a +1 bar the blue squares are exactly those with i + j odd (the
    neighbors of the poison cell); a -1 bar swaps blue and red.
    """
    if not (0 <= i <= bar.n and 0 <= j <= bar.m):
        raise OutOfBoundsError(f"cell ({i}, {j}) outside bar {bar}")
    if i == 0 and j == 0:
        return CellColor.BLACK
    odd = (i + j) % 2 == 1
    if bar.sign == -1:
        odd = not odd
    return CellColor.BLUE if odd else CellColor.RED


def legal_moves(bar: Bar, player: Player) -> list[Cut]:
    """All cuts the player may make, vertical first, keeps ascending.

    A vertical cut keeping columns 0..k is allowed when the top square of
    the next column, cell (k+1, m), has the mover's color; blue for Left
    on a +1 bar means (k+1) + m odd, i.e. k + m even.  Horizontal cuts
    are governed by cell (n, k+1) the same way.  On a -1 bar the two
    players' move sets swap.
    """
    wants_even = player is Player.LEFT
    if bar.sign == -1:
        wants_even = not wants_even
    parity = 0 if wants_even else 1
    cuts = [
        Cut(Axis.VERTICAL, k) for k in range(bar.n) if (k + bar.m) % 2 == parity
    ]
    cuts += [
        Cut(Axis.HORIZONTAL, k) for k in range(bar.m) if (bar.n + k) % 2 == parity
    ]
    return cuts


def apply_cut(bar: Bar, cut: Cut) -> Bar:
    """The bar left after the cut (the other piece gets eaten)."""
    if cut.keep < 0:
        raise IllegalCutError(f"cut must keep a nonnegative extent: {cut}")
    if cut.axis is Axis.VERTICAL:
        if cut.keep >= bar.n:
            raise IllegalCutError(f"vertical cut must shrink {bar}: keep={cut.keep}")
        return Bar(cut.keep, bar.m, bar.sign)
    if cut.keep >= bar.m:
        raise IllegalCutError(f"horizontal cut must shrink {bar}: keep={cut.keep}")
    return Bar(bar.n, cut.keep, bar.sign)


def squares_eaten(bar: Bar, cut: Cut) -> int:
    """How many unit squares the cut removes (the greedy tie-break)."""
    if cut.axis is Axis.VERTICAL:
        return (bar.n - cut.keep) * bar.rows
    return bar.columns * (bar.m - cut.keep)


def explain_illegal_cut(bar: Bar, cut: Cut, player: Player) -> str:
    """Why the cut is not available to the player, naming the color rule."""
    if cut.keep < 0 or (cut.keep >= bar.n if cut.axis is Axis.VERTICAL else cut.keep >= bar.m):
        return f"{cut.axis.value} cut keeping {cut.keep} does not shrink {bar}"
    if cut.axis is Axis.VERTICAL:
        cell = (cut.keep + 1, bar.m)
    else:
        cell = (bar.n, cut.keep + 1)
    color = cell_color(bar, *cell)
    needed = "blue" if player is Player.LEFT else "red"
    return (
        f"{player.name} needs a {needed} square governing the cut: "
        f"cell {cell} of {bar} is {color.value}"
    )


@lru_cache(maxsize=None)
def _bar_tree(n: int, m: int, sign: int) -> GameTree:
    bar = Bar(n, m, sign)
    left = (
        _bar_tree(child.n, child.m, child.sign)
        for child in (apply_cut(bar, cut) for cut in legal_moves(bar, Player.LEFT))
    )
    right = (
        _bar_tree(child.n, child.m, child.sign)
        for child in (apply_cut(bar, cut) for cut in legal_moves(bar, Player.RIGHT))
    )
    return GameTree(left, right)


def bar_tree(bar: Bar) -> GameTree:
    """Full game tree of the bar, shared across calls via (n, m, sign)."""
    return _bar_tree(bar.n, bar.m, bar.sign)


def value(bar: Bar) -> Dyadic:
    """Closed-form value: the alternating-string value of index n + m,
    except both-odd bars drop to index n + m - 2; the sign scales it."""
    index = bar.n + bar.m
    if bar.n % 2 == 1 and bar.m % 2 == 1:
        index -= 2
    v = hackenbush_value(index)
    return -v if bar.sign == -1 else v


def value_table(max_n: int, max_m: int) -> list[list[Dyadic]]:
    """grid[m][n] = value of the +1 bar (n, m); row 0 is the bottom row."""
    if max_n < 0 or max_m < 0:
        raise ValueError("table bounds must be nonnegative")
    return [
        [value(Bar(n, m)) for n in range(max_n + 1)] for m in range(max_m + 1)
    ]


# ----- text notation: sign then "(n,m)", e.g. "+(2,3)" or "-(1,3)" -----

_BAR_PATTERN = re.compile(r"([+-]?)\(\s*(\d+)\s*,\s*(\d+)\s*\)")


class NotationError(ValueError):
    """Unparseable bar or sum notation; carries the offending position."""

    def __init__(self, text: str, position: int, message: str):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


def parse_bar(text: str) -> Bar:
    match = _BAR_PATTERN.fullmatch(text.strip())
    if match is None:
        raise NotationError(text, 0, "expected [+|-](n,m)")
    sign = -1 if match.group(1) == "-" else 1
    return Bar(int(match.group(2)), int(match.group(3)), sign)


def format_bar(bar: Bar) -> str:
    sign = "+" if bar.sign == 1 else "-"
    return f"{sign}({bar.n},{bar.m})"
