"""Winning a four-bar endgame.

The sum  -(2,4) -(1,3) +(2,3) +(2,0)  is worth 1/32, so Left wins with
correct play.  This script walks through the reasoning the move picker
applies, then plays the game out with the engine driving both sides.
"""

from chocgame.engine import Player
from chocgame.solver import (
    SumGame,
    best_move,
    evaluate_moves,
    parse_sum,
    play,
    sum_moves,
    sum_value,
)

TEXT = "-(2,4) -(1,3) +(2,3) +(2,0)"
game = parse_sum(TEXT)

print(f"The sum {TEXT}")
print(f"  component values: "
      + " ".join(f"{bar} = {sum_value(SumGame((bar,)))}" for bar in game.bars))
print(f"  total {sum_value(game)} > 0, so Left should win")

print()
print("Left's options, one ply deep")
print("----------------------------")
for ev in evaluate_moves(game, Player.LEFT):
    move = ev.move
    print(f"  component {move.component}, {move.cut.axis.value:10s} keep {move.cut.keep}"
          f"  ->  total {str(ev.resulting):8s} (eats {ev.eats} squares)")

chosen = best_move(game, Player.LEFT)
print()
print(f"Chosen: component {chosen.component}, {chosen.cut.axis.value}, keep {chosen.cut.keep}")
print("Two moves preserve the win (both in the 1/32-grain component);")
print("the column is taken because it eats five squares to the row's three.")

print()
print("Playing it out, both sides perfect")
print("----------------------------------")
state = SumGame(game.bars, Player.LEFT)
mover = Player.LEFT
while True:
    move = best_move(state, mover)
    if move is None:
        print(f"  {mover.name} cannot move: {mover.opponent.name} wins")
        break
    state = play(state, move)
    bars = " ".join(str(b) for b in state.bars)
    print(f"  {mover.name} -> component {move.component} "
          f"{move.cut.axis.value} keep {move.cut.keep};  now {bars}  total {sum_value(state)}")
    mover = mover.opponent

assert not sum_moves(state, mover)
