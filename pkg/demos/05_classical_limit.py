"""The classical limit q -> 1 and expansions in h with q = e^h.

Run: python3 demos/05_classical_limit.py
"""

from qlie import render
from qlie.core import classical_limit, structure_table
from qlie.qcoeff import S, h_series

t = structure_table()

# %% At q = 1 the table is ordinary sl2.
lim = classical_limit(t)
print(f"matches sl2: {lim.matches_sl2}, antisymmetric: {lim.antisymmetric}, Jacobi: {lim.jacobi}")

# %% Series views of the nonzero constants.
print()
for (i, j, k), c in t.constants():
    if not c.is_zero():
        print(f"({i},{j},{k}) {render(c):14} = {render(h_series(c, 4))}")

# %% The symbol s expands to sqrt(sech h).
print(f"\ns = {render(h_series(S, 6))}")
