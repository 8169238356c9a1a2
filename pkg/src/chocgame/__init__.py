"""Exact engine for the partisan chocolate-bar cutting game.

Everything in this package is exact: positions evaluate to dyadic
rationals and the arithmetic is plain integers, never floats.  The
``engine`` module is a brute-force game-tree oracle kept deliberately
independent of the closed-form value rule in ``chocolate``, so each can
be verified against the other.
"""

from chocgame.dyadic import BoundsViolation, Dyadic, DyadicOverflowError, simplest_between
from chocgame.engine import (
    GameTree,
    NotANumberError,
    Outcome,
    Player,
    Relation,
    ResourceLimitError,
)
from chocgame.chocolate import Axis, Bar, CellColor, Cut
from chocgame.solver import RookBoard, SumGame, SumMove

__all__ = [
    "Axis",
    "Bar",
    "BoundsViolation",
    "CellColor",
    "Cut",
    "Dyadic",
    "DyadicOverflowError",
    "GameTree",
    "NotANumberError",
    "Outcome",
    "Player",
    "Relation",
    "ResourceLimitError",
    "RookBoard",
    "SumGame",
    "SumMove",
    "simplest_between",
]
