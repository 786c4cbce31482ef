"""q-antisymmetry: [a, b]_h = -[b~, a~]_h~ where ~ sends q to 1/q.

Run: python3 demos/02_q_antisymmetry.py
"""

from qlie import render
from qlie.core import BASIS, check_qantisymmetry, standard_embedding, structure_table
from qlie.sampling import random_vector, rng_for

e = standard_embedding()
t = structure_table()

# %% The bracket itself is not antisymmetric: [H_h, H_h]_h is nonzero.
print(f"[H_h, H_h]_h = {render(t[2, 2])}")

# %% But the twisted identity holds on every basis pair.
for a in BASIS:
    for b in BASIS:
        r = check_qantisymmetry(a, b, e)
        print(f"{render(a):5} {render(b):5}  lhs = {render(r.left):24} ok = {r.passed}")

# %% And on random elements with coefficients in Q(q)(s).
rng = rng_for(11)
ok = all(check_qantisymmetry(random_vector(rng), random_vector(rng), e).passed for _ in range(50))
print(f"\n50 random pairs: {'all pass' if ok else 'FAILURE'}")
