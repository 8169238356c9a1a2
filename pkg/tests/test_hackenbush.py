"""Alternating-string values, their Jacobsthal numerators, and the
string game trees, cross-checked against the brute-force oracle."""

import pytest

from chocgame.dyadic import Dyadic
from chocgame.engine import oracle_value
from chocgame.hackenbush import (
    hackenbush_value,
    jacobsthal,
    jacobsthal_recursive,
    string_tree,
)


def test_jacobsthal_known_values():
    assert [jacobsthal(n) for n in range(1, 7)] == [1, 1, 3, 5, 11, 21]
    assert jacobsthal(0) == 0
    assert jacobsthal(12) == 1365  # frozen from iterating the recursion


def test_jacobsthal_closed_form_matches_recursion():
    for n in range(40):
        assert jacobsthal(n) == jacobsthal_recursive(n)


def test_jacobsthal_rejects_negative():
    with pytest.raises(ValueError):
        jacobsthal(-1)


def test_string_values_known():
    want = ["1", "1/2^1", "3/2^2", "5/2^3", "11/2^4", "21/2^5"]
    assert [str(hackenbush_value(n)) for n in range(1, 7)] == want
    assert hackenbush_value(0) == Dyadic(0)
    assert hackenbush_value(4) == Dyadic(5, 3)
    assert hackenbush_value(16) == Dyadic(21845, 15)


def test_string_value_is_jacobsthal_over_power():
    for n in range(1, 21):
        assert hackenbush_value(n) == Dyadic(jacobsthal(n), n - 1)


def test_string_value_is_alternating_partial_sum():
    total = Dyadic(0)
    for n in range(1, 21):
        term = Dyadic(1 if n % 2 == 1 else -1, n - 1)  # +-1/2^(n-1)
        total = total + term
        assert hackenbush_value(n) == total


def test_even_odd_subsequences_monotone():
    for n in range(11):
        assert hackenbush_value(2 * n) < hackenbush_value(2 * (n + 1))
        assert hackenbush_value(2 * n + 1) > hackenbush_value(2 * (n + 1) + 1)


def test_string_tree_shapes():
    assert not string_tree(0).left and not string_tree(0).right

    three = string_tree(3)
    assert three.left == {string_tree(0), string_tree(2)}
    assert three.right == {string_tree(1)}

    five = string_tree(5)
    assert five.left == {string_tree(0), string_tree(2), string_tree(4)}
    assert five.right == {string_tree(1), string_tree(3)}


def test_string_tree_rejects_negative():
    with pytest.raises(ValueError):
        string_tree(-2)


def test_oracle_agrees_with_closed_form():
    for n in range(13):
        assert oracle_value(string_tree(n)) == hackenbush_value(n)
