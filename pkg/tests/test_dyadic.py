"""Dyadic arithmetic and the simplest-number rule.

fractions.Fraction serves as the independent arithmetic oracle, and a
brute-force enumeration by increasing simplicity double-checks
simplest_between.
"""

import random
from fractions import Fraction

import pytest

from chocgame.dyadic import (
    EXPONENT_LIMIT,
    BoundsViolation,
    Dyadic,
    DyadicOverflowError,
    simplest_between,
)
from chocgame.hackenbush import hackenbush_value


def as_fraction(d: Dyadic) -> Fraction:
    return Fraction(d.numerator, 1 << d.exponent)


def random_dyadic(rng: random.Random, max_num: int = 1 << 20, max_exp: int = 16) -> Dyadic:
    return Dyadic(rng.randint(-max_num, max_num), rng.randint(0, max_exp))


# ----- construction / normalization -----

@pytest.mark.parametrize(
    "num, exp, want_num, want_exp",
    [
        (0, 5, 0, 0),
        (6, 3, 3, 2),
        (11, 4, 11, 4),
        (-8, 3, -1, 0),
        (12, 0, 12, 0),
    ],
)
def test_normalization(num, exp, want_num, want_exp):
    d = Dyadic(num, exp)
    assert (d.numerator, d.exponent) == (want_num, want_exp)


def test_normalization_idempotent():
    rng = random.Random(7)
    for _ in range(500):
        d = random_dyadic(rng)
        again = Dyadic(d.numerator, d.exponent)
        assert (again.numerator, again.exponent) == (d.numerator, d.exponent)


def test_zero_forces_zero_exponent():
    assert Dyadic(0, 13).exponent == 0


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_immutable():
    d = Dyadic(3, 1)
    with pytest.raises(AttributeError):
        d.numerator = 5


# ----- arithmetic -----

def test_endgame_sum_chain():
    total = Dyadic(-21, 5) + Dyadic(-1, 1) + Dyadic(11, 4) + Dyadic(1, 1)
    assert total == Dyadic(1, 5)


def test_additive_inverse():
    rng = random.Random(11)
    for _ in range(200):
        d = random_dyadic(rng)
        assert d + (-d) == Dyadic(0)


def test_arithmetic_matches_fractions():
    rng = random.Random(13)
    for _ in range(1000):
        a, b = random_dyadic(rng), random_dyadic(rng)
        assert as_fraction(a + b) == as_fraction(a) + as_fraction(b)
        assert as_fraction(a - b) == as_fraction(a) - as_fraction(b)
        assert as_fraction(-a) == -as_fraction(a)


def test_add_associative_commutative():
    rng = random.Random(17)
    for _ in range(1000):
        a, b, c = (random_dyadic(rng, max_exp=12) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a


def test_order_examples():
    # the string-value sequence 1, 1/2, 3/4, 5/8, 11/16, 21/32 zigzags
    assert Dyadic(5, 3) < Dyadic(11, 4)
    assert Dyadic(1, 1) < Dyadic(3, 2)
    assert Dyadic(3, 2) > Dyadic(5, 3)
    assert Dyadic(11, 4) > Dyadic(21, 5)
    assert Dyadic(21, 5) < Dyadic(1)


def test_order_matches_fractions():
    rng = random.Random(19)
    for _ in range(500):
        a, b = random_dyadic(rng), random_dyadic(rng)
        assert (a < b) == (as_fraction(a) < as_fraction(b))
        assert (a == b) == (as_fraction(a) == as_fraction(b))
        assert (a >= b) == (as_fraction(a) >= as_fraction(b))


# ----- overflow -----

def test_overflow_detected():
    with pytest.raises(DyadicOverflowError):
        Dyadic(1, EXPONENT_LIMIT + 1)


def test_overflow_at_the_limit():
    # addition cannot overflow (the exponent of a sum never exceeds the
    # inputs'), but construction and parsing past the limit must raise
    assert Dyadic(1, EXPONENT_LIMIT).exponent == EXPONENT_LIMIT
    with pytest.raises(DyadicOverflowError):
        Dyadic.parse(f"1/2^{EXPONENT_LIMIT + 1}")
    with pytest.raises(DyadicOverflowError):
        hackenbush_value(EXPONENT_LIMIT + 2)  # exponent would be limit + 1


# ----- text format -----

@pytest.mark.parametrize("text", ["0", "3", "-3", "11/2^4", "-1/2^1", "21/2^5"])
def test_parse_print_roundtrip(text):
    assert str(Dyadic.parse(text)) == text


def test_print_parse_roundtrip():
    rng = random.Random(23)
    for _ in range(300):
        d = random_dyadic(rng)
        assert Dyadic.parse(str(d)) == d


def test_parse_normalizes():
    assert str(Dyadic.parse("6/2^3")) == "3/2^2"
    assert str(Dyadic.parse("+4/2^2")) == "1"


@pytest.mark.parametrize("bad", ["", "x", "1/3", "1/2^", "2^3", "1.5"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Dyadic.parse(bad)


# ----- simplest_between -----

def brute_simplest(lo, hi, max_abs=64, max_exp=24):
    """Enumerate candidates from simplest to finest; the first hit wins.

    Integers in order of absolute value first, then dyadics by exponent;
    at the first exponent whose grid reaches the interval the point must
    be unique (asserted).
    """
    def inside(x: Dyadic) -> bool:
        return (lo is None or lo < x) and (hi is None or x < hi)

    for magnitude in range(max_abs + 1):
        for signed in {magnitude, -magnitude}:
            if inside(Dyadic(signed)):
                return Dyadic(signed)
    # no integer inside, so both bounds must be present and close together
    assert lo is not None and hi is not None
    for exponent in range(1, max_exp + 1):
        lo_f, hi_f = as_fraction(lo), as_fraction(hi)
        start = (lo_f * 2**exponent).__floor__() + 1
        stop = (hi_f * 2**exponent).__ceil__()
        hits = [
            Dyadic(i, exponent)
            for i in range(start, stop)
            if i % 2 != 0 and inside(Dyadic(i, exponent))
        ]
        if hits:
            assert len(hits) == 1, f"minimal exponent {exponent} not unique"
            return hits[0]
    raise AssertionError("no candidate found")


@pytest.mark.parametrize(
    "lo, hi, want",
    [
        (None, None, "0"),
        ("1/2^1", "3/2^2", "5/2^3"),
        ("5/2^3", "3/2^2", "11/2^4"),
        ("1/2^1", "43/2^6", "5/2^3"),
        (None, "1", "0"),
        ("0", None, "1"),
        ("2", None, "3"),
        (None, "0", "-1"),
        (None, "-3/2^1", "-2"),
        ("1", "2", "3/2^1"),
        ("1/2^1", "5/2^1", "1"),
        ("-5/2^1", "5/2^1", "0"),
        ("-5/2^1", "-1/2^1", "-1"),
    ],
)
def test_simplest_between_examples(lo, hi, want):
    lo_d = None if lo is None else Dyadic.parse(lo)
    hi_d = None if hi is None else Dyadic.parse(hi)
    assert simplest_between(lo_d, hi_d) == Dyadic.parse(want)


def test_simplest_between_bounds_violation():
    with pytest.raises(BoundsViolation):
        simplest_between(Dyadic(1), Dyadic(1))
    with pytest.raises(BoundsViolation):
        simplest_between(Dyadic(3, 2), Dyadic(1, 1))


def test_simplest_between_strictly_inside_and_minimal():
    values = [hackenbush_value(n) for n in range(13)]
    pairs = [(a, b) for a in values for b in values if a < b]
    pairs += [(None, v) for v in values] + [(v, None) for v in values]
    pairs.append((None, None))
    for lo, hi in pairs:
        got = simplest_between(lo, hi)
        if lo is not None:
            assert lo < got
        if hi is not None:
            assert got < hi
        assert got == brute_simplest(lo, hi)
