"""Structure constants of (sl2)_h, computed from the PBW algebra.

Run: python3 demos/01_structure_constants.py
"""

from qlie import render
from qlie.core import BASIS, BASIS_NAMES, bracket, standard_embedding, structure_table

# %% The embedding: each basis element is an element of U_q(sl2).
e = standard_embedding()
for name, v in zip(BASIS_NAMES, BASIS):
    print(f"{name:5} -> {render(e.image_of(v))}")

# %% Brackets are adjoint actions, decomposed back onto the basis.
print()
t = structure_table()
for i, a in enumerate(BASIS_NAMES):
    for j, b in enumerate(BASIS_NAMES):
        print(f"[{a}, {b}]_h = {render(t[i, j])}")

# %% Bracket is bilinear over the coefficient field.
from qlie.parser import evaluate

x = evaluate("q*Xp_h + H_h", "qlie")
y = evaluate("Xm_h - s*H_h", "qlie")
print()
print(f"[{render(x)}, {render(y)}]_h = {render(bracket(x, y, e))}")

# %% LaTeX for the whole table.
print()
print(render(t, "latex"))
