"""Generic short-game trees and the brute-force oracle.

This module knows nothing about chocolate bars.  It provides explicit
Left/Right option trees plus the textbook machinery: outcome by minimax,
negation, disjunctive sum, comparison via the sign of ``g - h``, value
extraction through the simplest-number rule, option domination, the
one-node loss-property check used for numberhood proofs, and tree
isomorphism.  Everything here is the independent ground truth the
closed-form modules are verified against.

Trees are hash-consed: building the same option sets twice yields the
same object, so structural equality is identity and memo tables are
cheap.  Construction counts against a configurable node budget so a
misjudged sweep raises instead of hanging.

Trees are immutable once built.  The memo tables hold deterministic
entries, so concurrent readers racing an insert can at worst recompute
the same value; sharing across threads needs no locking.
"""

from __future__ import annotations

from enum import Enum
from itertools import count
from typing import Iterable, Optional

from chocgame.dyadic import Dyadic, simplest_between


class ResourceLimitError(RuntimeError):
    """The game-tree node budget was exhausted."""


class NotANumberError(ValueError):
    """A position failed the max-Left < min-Right numberhood check."""


class Player(Enum):
    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "Player":
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Outcome(Enum):
    """Who wins with optimal play: Left always, Right always, the Next
    player, or the Previous player."""

    L = "L"
    R = "R"
    N = "N"
    P = "P"


# The outcome lattice: R below everything, L above everything, N and P
# incomparable.  Pairs are (lower, higher).
_OUTCOME_LE = {
    (Outcome.R, Outcome.N),
    (Outcome.R, Outcome.P),
    (Outcome.R, Outcome.L),
    (Outcome.N, Outcome.L),
    (Outcome.P, Outcome.L),
}


def outcome_le(a: Outcome, b: Outcome) -> bool:
    """a <= b in the outcome partial order (from Left's point of view)."""
    return a is b or (a, b) in _OUTCOME_LE


class Relation(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    CONFUSED = "confused"


_node_budget = 10_000_000
_node_seq = count()


def set_node_budget(limit: int) -> None:
    """Cap the number of distinct tree nodes ever created (default 10^7)."""
    global _node_budget
    _node_budget = limit


class GameTree:
    """A short game {left options | right options}, hash-consed.

    Option sets are deduplicated structurally; two calls with the same
    options return the same object, so ``is`` means "exactly the same
    tree".
    """

    __slots__ = ("left", "right", "seq")

    _pool: dict = {}

    def __new__(cls, left: Iterable["GameTree"] = (), right: Iterable["GameTree"] = ()):
        left = frozenset(left)
        right = frozenset(right)
        key = (left, right)
        node = cls._pool.get(key)
        if node is None:
            if len(cls._pool) >= _node_budget:
                raise ResourceLimitError(
                    f"node budget of {_node_budget} trees exhausted"
                )
            node = super().__new__(cls)
            node.left = left
            node.right = right
            node.seq = next(_node_seq)
            cls._pool[key] = node
        return node

    def __repr__(self) -> str:
        return f"<GameTree #{self.seq} |L|={len(self.left)} |R|={len(self.right)}>"


ZERO_GAME = GameTree()

_outcome_memo: dict[tuple[GameTree, Player], bool] = {}
_neg_memo: dict[GameTree, GameTree] = {}
_sum_memo: dict[tuple[GameTree, GameTree], GameTree] = {}
_value_memo: dict[GameTree, Dyadic] = {}


def _wins_moving_first(g: GameTree, player: Player) -> bool:
    key = (g, player)
    cached = _outcome_memo.get(key)
    if cached is not None:
        return cached
    options = g.left if player is Player.LEFT else g.right
    result = any(not _wins_moving_first(o, player.opponent) for o in options)
    _outcome_memo[key] = result
    return result


def oracle_outcome(g: GameTree) -> Outcome:
    """Minimax outcome under normal play (no move available = loss)."""
    left_wins = _wins_moving_first(g, Player.LEFT)
    right_wins = _wins_moving_first(g, Player.RIGHT)
    if left_wins and right_wins:
        return Outcome.N
    if left_wins:
        return Outcome.L
    if right_wins:
        return Outcome.R
    return Outcome.P


def neg(g: GameTree) -> GameTree:
    """Mirror the game: -{L | R} = {-R | -L}."""
    cached = _neg_memo.get(g)
    if cached is not None:
        return cached
    result = GameTree((neg(o) for o in g.right), (neg(o) for o in g.left))
    _neg_memo[g] = result
    _neg_memo[result] = g
    return result


def sum_trees(g: GameTree, h: GameTree) -> GameTree:
    """Disjunctive sum: move in exactly one component."""
    cached = _sum_memo.get((g, h))
    if cached is not None:
        return cached
    left = [sum_trees(gl, h) for gl in g.left]
    left += [sum_trees(g, hl) for hl in h.left]
    right = [sum_trees(gr, h) for gr in g.right]
    right += [sum_trees(g, hr) for hr in h.right]
    result = GameTree(left, right)
    _sum_memo[(g, h)] = result
    _sum_memo[(h, g)] = result
    return result


def oracle_compare(g: GameTree, h: GameTree) -> Relation:
    """Compare by playing g - h: who wins it decides the relation."""
    outcome = oracle_outcome(sum_trees(g, neg(h)))
    return {
        Outcome.P: Relation.EQUAL,
        Outcome.L: Relation.GREATER,
        Outcome.R: Relation.LESS,
        Outcome.N: Relation.CONFUSED,
    }[outcome]


def ge(g: GameTree, h: GameTree) -> bool:
    return oracle_compare(g, h) in (Relation.GREATER, Relation.EQUAL)


def le(g: GameTree, h: GameTree) -> bool:
    return oracle_compare(g, h) in (Relation.LESS, Relation.EQUAL)


def oracle_value(g: GameTree) -> Dyadic:
    """Exact value via the simplest-number rule, applied recursively.

    Numberhood is checked at every node (max Left option value must be
    strictly below min Right option value) rather than assumed; a switch
    like {0 | 0} raises NotANumberError.
    """
    cached = _value_memo.get(g)
    if cached is not None:
        return cached
    left_values = [oracle_value(o) for o in g.left]
    right_values = [oracle_value(o) for o in g.right]
    lo = max(left_values) if left_values else None
    hi = min(right_values) if right_values else None
    if lo is not None and hi is not None and lo >= hi:
        raise NotANumberError(
            f"not a number: max Left value {lo} >= min Right value {hi}"
        )
    value = simplest_between(lo, hi)
    _value_memo[g] = value
    return value


def dominate(options: Iterable[GameTree], side: Player) -> frozenset[GameTree]:
    """Drop every option weakly beaten by another one on the same side.

    For Left an option is beaten by any >= alternative, for Right by any
    <= alternative.  Among mutually equal options exactly one survives
    (the oldest node, for determinism).  The enclosing position's value
    is unchanged.
    """
    keep: list[GameTree] = []
    beats = ge if side is Player.LEFT else le
    for option in sorted(options, key=lambda o: o.seq):
        if any(beats(kept, option) for kept in keep):
            continue
        keep = [kept for kept in keep if not beats(option, kept)]
        keep.append(option)
    return frozenset(keep)


def f_loss_holds(g: GameTree) -> bool:
    """Check the per-pair loss property at this node only.

    For every pair (gl, gr) of a Left and a Right option there must be a
    Left reply gr -> grl with grl >= gl, or a Right reply gl -> glr with
    glr <= gr.  Holding hereditarily forces every position to be a
    number; callers sweep the closure themselves.
    """
    for gl in g.left:
        for gr in g.right:
            if any(ge(grl, gl) for grl in gr.left):
                continue
            if any(le(glr, gr) for glr in gl.right):
                continue
            return False
    return True


def iso(g: GameTree, h: GameTree) -> bool:
    """Exactly the same tree (stronger than equal value).

    Because trees are hash-consed and option sets deduplicated, two trees
    are isomorphic precisely when they are the same object; the recursive
    set comparison below reduces to that.
    """
    if g is h:
        return True
    return g.left == h.left and g.right == h.right


def subpositions(g: GameTree) -> set[GameTree]:
    """g together with everything reachable from it."""
    seen: set[GameTree] = set()
    stack = [g]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(node.left)
        stack.extend(node.right)
    return seen


def tree_size(g: GameTree) -> int:
    """Number of distinct subpositions (the DAG size, not the tree size)."""
    return len(subpositions(g))


def nodes_created() -> int:
    return len(GameTree._pool)
