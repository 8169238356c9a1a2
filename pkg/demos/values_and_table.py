"""A first look at exact bar values.

Every position of the cutting game is worth an exact dyadic rational.
This script prints the values of a few bars, the zigzag sequence the
single-column bars follow, and the full 10 x 10 grid.
"""

from chocgame.chocolate import Bar, value, value_table
from chocgame.hackenbush import hackenbush_value, jacobsthal

print("Single bars")
print("-----------")
for notation in [(1, 0), (0, 1), (1, 1), (2, 3), (2, 4), (9, 9)]:
    bar = Bar(*notation)
    print(f"  {bar}  ->  {value(bar)}")
print(f"  {Bar(2, 4, -1)}  ->  {value(Bar(2, 4, -1))}   (mirrored coloring negates)")

print()
print("Single-column bars zigzag toward 2/3")
print("------------------------------------")
for m in range(1, 9):
    v = hackenbush_value(m)
    print(f"  (0,{m})  ->  {str(v):12s} = {v.to_float():.6f}")
print("  numerators are the Jacobsthal numbers:",
      [jacobsthal(n) for n in range(1, 9)])

print()
print("The value grid, top row m = 9")
print("-----------------------------")
grid = value_table(9, 9)
for row in reversed(grid):
    print("  " + "  ".join(f"{str(v):>12s}" for v in row))

print()
print("Note the antidiagonal stripes: every bar with the same odd n + m")
print("has the same value, and a both-odd bar copies the value from two")
print("steps down its diagonal.")
