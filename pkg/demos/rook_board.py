"""The chessboard reading of the same game.

Rooks that only slide left or down, on squares colored like a
checkerboard: a black rook may be moved by Left onto dark squares and
by Right onto light ones, a white rook the other way around.  Each rook
at (x, y) behaves exactly like the bar (x, y), with its color fixing
the sign.
"""

from chocgame.engine import Player
from chocgame.solver import best_move, parse_rooks, rooks_to_sum, sum_outcome, sum_value

BOARD = """
W 2 4
W 1 3
B 2 3
B 2 0
"""

board = parse_rooks(BOARD)
game = rooks_to_sum(board)

from chocgame.chocolate import value

print("Rooks and their bars")
print("--------------------")
for rook, bar in zip(board.rooks, game.bars):
    print(f"  {rook.color.value:5s} rook at ({rook.x},{rook.y})  ->  {bar}  worth {value(bar)}")

print(f"total {sum_value(game)}, outcome {sum_outcome(game).value}")

move = best_move(game, Player.LEFT)
rook = board.rooks[move.component]
axis = "file" if move.cut.axis.value == "vertical" else "rank"
print(f"Left's winning move: slide the {rook.color.value} rook at ({rook.x},{rook.y}) "
      f"along its {axis} to {axis} {move.cut.keep}")

print()
print("Adding a black and a white rook on one square changes nothing:")
extended = parse_rooks(BOARD + "\nB 5 6\nW 5 6")
print(f"  total with the pair: {sum_value(rooks_to_sum(extended))}")
