"""
The three solution families
===========================

Off-diagonal products, antisymmetrised products and the c-dependent family
with a derivative jump on the diagonal.
"""

from fractions import Fraction

from deltastar.conditions import is_solution
from deltastar.core import Params
from deltastar.solutions import all_families, expected_counts

for n in range(2, 7):
    p = Params(n, Fraction(3, 2), Fraction(5, 7), 2)
    fams = all_families(p)
    counts = [len(f) for f in fams]
    exact = all(is_solution(w) for f in fams for w in f.waves)
    print(f"n={n}: counts {counts} (closed form {list(expected_counts(n).values())[:3]}), all exact solutions: {exact}")

p = Params(3, Fraction(3, 2), Fraction(5, 7), 2)
for label in all_families(p)[2].labels:
    print(label)
print(all_families(p)[2].waves[0])
