"""The chocolate ruleset: coloring, move generation, cuts, trees, and
the closed-form value rule against the oracle and the reference grid."""

import pytest

from chocgame.chocolate import (
    Axis,
    Bar,
    CellColor,
    Cut,
    IllegalCutError,
    NotationError,
    OutOfBoundsError,
    apply_cut,
    bar_tree,
    cell_color,
    explain_illegal_cut,
    format_bar,
    legal_moves,
    parse_bar,
    squares_eaten,
    value,
    value_table,
)
from chocgame.dyadic import Dyadic
from chocgame.engine import Player, iso, neg, oracle_compare, oracle_value, Relation
from chocgame.hackenbush import hackenbush_value, string_tree
from chocgame.verify import REFERENCE_GRID


# ----- coloring -----

def test_poison_is_black_and_neighbors_blue():
    bar = Bar(2, 3)
    assert cell_color(bar, 0, 0) is CellColor.BLACK
    assert cell_color(bar, 1, 0) is CellColor.BLUE
    assert cell_color(bar, 0, 1) is CellColor.BLUE


def test_checkerboard_parity():
    bar = Bar(4, 4)
    for i in range(5):
        for j in range(5):
            if (i, j) == (0, 0):
                continue
            want = CellColor.BLUE if (i + j) % 2 == 1 else CellColor.RED
            assert cell_color(bar, i, j) is want


def test_top_right_color_follows_parity():
    # (2,3) has an odd coordinate sum at its top-right cell, so it is
    # blue; that is exactly what lets Left cut vertically to (1,3)
    assert cell_color(Bar(2, 3), 2, 3) is CellColor.BLUE
    assert cell_color(Bar(2, 2), 2, 2) is CellColor.RED


def test_mirrored_bar_swaps_colors():
    assert cell_color(Bar(2, 3, -1), 1, 0) is CellColor.RED
    assert cell_color(Bar(2, 3, -1), 0, 0) is CellColor.BLACK
    assert cell_color(Bar(2, 3, -1), 2, 2) is CellColor.BLUE


def test_cell_out_of_bounds():
    with pytest.raises(OutOfBoundsError):
        cell_color(Bar(2, 3), 3, 0)
    with pytest.raises(OutOfBoundsError):
        cell_color(Bar(2, 3), 0, -1)


# ----- move generation -----

def cuts(bar, player):
    return {(c.axis, c.keep) for c in legal_moves(bar, player)}


def test_moves_of_2_3():
    bar = Bar(2, 3)
    assert cuts(bar, Player.LEFT) == {
        (Axis.VERTICAL, 1), (Axis.HORIZONTAL, 0), (Axis.HORIZONTAL, 2),
    }
    assert cuts(bar, Player.RIGHT) == {(Axis.VERTICAL, 0), (Axis.HORIZONTAL, 1)}


def test_left_stuck_at_1_1():
    assert legal_moves(Bar(1, 1), Player.LEFT) == []
    assert cuts(Bar(1, 1), Player.RIGHT) == {(Axis.VERTICAL, 0), (Axis.HORIZONTAL, 0)}


def test_poison_square_has_no_moves():
    assert legal_moves(Bar(0, 0), Player.LEFT) == []
    assert legal_moves(Bar(0, 0), Player.RIGHT) == []


def test_mirrored_bar_swaps_movers():
    for n in range(5):
        for m in range(5):
            assert cuts(Bar(n, m, -1), Player.LEFT) == cuts(Bar(n, m), Player.RIGHT)
            assert cuts(Bar(n, m, -1), Player.RIGHT) == cuts(Bar(n, m), Player.LEFT)


def test_color_parity_soundness():
    # every legal cut is governed by a square of the mover's color
    for n in range(9):
        for m in range(9):
            for sign in (1, -1):
                bar = Bar(n, m, sign)
                for player, want in ((Player.LEFT, CellColor.BLUE), (Player.RIGHT, CellColor.RED)):
                    for cut in legal_moves(bar, player):
                        if cut.axis is Axis.VERTICAL:
                            governing = (cut.keep + 1, m)
                        else:
                            governing = (n, cut.keep + 1)
                        assert cell_color(bar, *governing) is want


# ----- cuts -----

def test_apply_cut_examples():
    assert apply_cut(Bar(2, 3), Cut(Axis.VERTICAL, 1)) == Bar(1, 3)
    assert apply_cut(Bar(2, 3), Cut(Axis.HORIZONTAL, 1)) == Bar(2, 1)
    assert apply_cut(Bar(2, 4, -1), Cut(Axis.VERTICAL, 1)) == Bar(1, 4, -1)


def test_apply_cut_must_shrink():
    with pytest.raises(IllegalCutError):
        apply_cut(Bar(2, 3), Cut(Axis.VERTICAL, 2))
    with pytest.raises(IllegalCutError):
        apply_cut(Bar(2, 3), Cut(Axis.HORIZONTAL, 5))


def test_squares_eaten():
    assert squares_eaten(Bar(2, 4), Cut(Axis.VERTICAL, 1)) == 5
    assert squares_eaten(Bar(2, 4), Cut(Axis.HORIZONTAL, 3)) == 3
    assert squares_eaten(Bar(2, 4), Cut(Axis.HORIZONTAL, 1)) == 9


def test_explain_illegal_cut_names_the_color():
    reason = explain_illegal_cut(Bar(2, 3), Cut(Axis.VERTICAL, 0), Player.LEFT)
    assert "blue" in reason and "red" in reason and "(1, 3)" in reason


# ----- trees -----

def test_bar_tree_examples():
    assert bar_tree(Bar(0, 0)).left == frozenset()
    assert iso(bar_tree(Bar(0, 5)), string_tree(5))
    assert iso(bar_tree(Bar(2, 2, -1)), neg(bar_tree(Bar(2, 2))))


# ----- values -----

@pytest.mark.parametrize(
    "bar, want",
    [
        (Bar(2, 3), "11/2^4"),
        (Bar(1, 3), "1/2^1"),
        (Bar(1, 1), "0"),
        (Bar(9, 9), "21845/2^15"),
        (Bar(2, 4, -1), "-21/2^5"),
        (Bar(1, 0), "1"),
        (Bar(0, 1), "1"),
    ],
)
def test_value_examples(bar, want):
    assert value(bar) == Dyadic.parse(want)


def test_value_rule_by_parity():
    for n in range(13):
        for m in range(13):
            index = n + m - 2 if n % 2 == 1 and m % 2 == 1 else n + m
            assert value(Bar(n, m)) == hackenbush_value(index)


def test_value_matches_oracle_small():
    for n in range(7):
        for m in range(7):
            for sign in (1, -1):
                bar = Bar(n, m, sign)
                assert oracle_value(bar_tree(bar)) == value(bar)


def test_diagonal_equivalence():
    # bars on the same odd antidiagonal share a value
    for n in range(13):
        for m in range(13):
            if (n + m) % 2 == 1:
                assert value(Bar(n, m)) == hackenbush_value(n + m)
    for total in (3, 5, 7):
        first = value(Bar(0, total))
        for n in range(total + 1):
            assert value(Bar(n, total - n)) == first
    assert oracle_compare(bar_tree(Bar(2, 3)), bar_tree(Bar(4, 1))) is Relation.EQUAL


def test_value_bounds_and_extremes():
    ones = []
    for n in range(13):
        for m in range(13):
            v = value(Bar(n, m))
            assert Dyadic(0) <= v <= Dyadic(1)
            if v == Dyadic(1):
                ones.append((n, m))
    assert sorted(ones) == [(0, 1), (1, 0)]


def test_negation_symmetry():
    for n in range(13):
        for m in range(13):
            assert value(Bar(n, m, -1)) == -value(Bar(n, m))


def test_even_even_option_structure():
    # for n, m both even the best Left option is worth the value one step
    # down and the best Right option the value one step up from there
    for n in range(0, 11, 2):
        for m in range(0, 11, 2):
            bar = Bar(n, m)
            left = [value(apply_cut(bar, c)) for c in legal_moves(bar, Player.LEFT)]
            right = [value(apply_cut(bar, c)) for c in legal_moves(bar, Player.RIGHT)]
            if n == m == 0:
                assert not left and not right
                continue
            assert max(left) == hackenbush_value(n + m - 2)
            assert min(right) == hackenbush_value(n + m - 1)


# ----- table -----

def test_value_table_matches_reference():
    grid = value_table(9, 9)
    for m in range(10):
        for n in range(10):
            assert grid[m][n] == Dyadic.parse(REFERENCE_GRID[m][n])


def test_value_table_edges():
    assert value_table(0, 0) == [[Dyadic(0)]]
    bottom = value_table(3, 0)[0]
    assert [str(v) for v in bottom] == ["0", "1", "1/2^1", "3/2^2"]
    with pytest.raises(ValueError):
        value_table(-1, 3)


# ----- notation -----

def test_parse_format_roundtrip():
    for text in ["+(2,3)", "-(1,3)", "+(0,0)", "-(12,7)"]:
        assert format_bar(parse_bar(text)) == text
    assert parse_bar("(2,3)") == Bar(2, 3)
    assert parse_bar(" + (2,3) ".replace(" ", "")) == Bar(2, 3)


@pytest.mark.parametrize("bad", ["", "2,3", "(2,3", "+(2;3)", "(-1,3)", "bar"])
def test_parse_rejects(bad):
    with pytest.raises(NotationError):
        parse_bar(bad)


def test_bar_validation():
    with pytest.raises(ValueError):
        Bar(-1, 0)
    with pytest.raises(ValueError):
        Bar(0, 0, 2)
