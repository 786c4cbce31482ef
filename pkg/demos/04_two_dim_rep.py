"""The 2-dimensional representation and matrix q-conjugation.

Run: python3 demos/04_two_dim_rep.py
"""

from qlie import render
from qlie.core import BASIS_NAMES, structure_table
from qlie.rep import builtin_rep2, verify_representation
from qlie.verify import corrupt_rep


def show(m):
    return "[" + "; ".join(", ".join(render(x) for x in row) for row in m) + "]"


r = builtin_rep2()

# %% Images of the basis.
for name, m in zip(BASIS_NAMES, r.images):
    print(f"pi({name}) = {show(m)}")

# %% The q-commutator pi(a)pi(b) - (pi(b)~ pi(a)~)~ reproduces every bracket.
report = verify_representation(r, structure_table())
print()
for p in report.pairs:
    print(f"[{p.pair[0]}, {p.pair[1]}]: {'pass' if p.passed else 'FAIL'}")
print(f"involution: {not report.involution_failures}, q-linear: {report.linearity_ok}")

# %% A single flipped sign is caught, and the failing pairs are named.
bad = verify_representation(corrupt_rep(r), structure_table())
print(f"\ncorrupted rep fails on {len(bad.failed_pairs)} pairs, first {bad.failed_pairs[0]}")
