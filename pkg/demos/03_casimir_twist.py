"""The Casimir element and twisted embeddings.

Right-multiplying the embedding by a polynomial p(C) in the Casimir, with
p(1) = 1, changes the images but not the structure constants.

Run: python3 demos/03_casimir_twist.py
"""

from fractions import Fraction

from qlie import render
from qlie.core import HH, structure_table, twisted_embedding
from qlie.pbw import E, F, K, casimir, commutator

# %% C commutes with every generator.
c = casimir()
print(f"C = {render(c)}")
for name, g in (("E", E), ("F", F), ("K", K)):
    print(f"[C, {name}] = {render(commutator(c, g))}")

# %% Twisting changes the image of H_h ...
print()
for p in ([1], [0, 1], [Fraction(1, 2), Fraction(1, 2)]):
    label = "[" + ", ".join(str(x) for x in p) + "]"
    img = twisted_embedding(p).image_of(HH)
    print(f"p = {label}: H_h has {len(img.terms)} PBW terms")

# %% ... but the table is identical.
base = structure_table()
for p in ([0, 1], [-1, 2], [0, 0, 1]):
    print(f"p = {p}: same table = {structure_table(twisted_embedding(p)) == base}")

# %% Coefficients must sum to 1.
try:
    twisted_embedding([1, 1])
except ValueError as exc:
    print(f"\nrejected: {exc}")
