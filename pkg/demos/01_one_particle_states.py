"""
One-particle states on the cut star graph
=========================================

The vertex scattering states are combined into a real basis phi^0..phi^{n-1},
and one extra state phi^n that is not smooth across the diagonal.
"""

from fractions import Fraction

from deltastar.basis import X, complex_combination, lift, phi, scattering_matrix, scattering_state
from deltastar.conditions import vertex_residuals
from deltastar.core import Params

p = Params(4, Fraction(3, 2), Fraction(5, 7), 2)

# The scattering matrix of the Kirchhoff vertex is S = 2P - I
for row in scattering_matrix(p.n):
    print(" ".join(f"{str(v):>5}" for v in row))

# Half the sum of all scattering states is a pure cosine on every edge
half = (Fraction(1, 2), Fraction(0))
re, im = complex_combination([(half, scattering_state(p, l)) for l in range(1, p.n + 1)])
print("phi^0 recovered:", re == phi(p, 0, X), "| imaginary part zero:", lift(im).is_zero())

# phi^n: sin(kx) except a factor (1 - n) below the diagonal of a shared edge
last = phi(p, p.n, X)
print("phi^n sin coefficient on edge 1 (diff, greater, less):", [str(s) for _, s in last.profiles[0]])

# Every state still satisfies the vertex conditions; the phi^n Kirchhoff sum
# cancels as (n - 1) k + (1 - n) k
for j in range(p.n + 1):
    ok = all(r.passed for r in vertex_residuals(lift(phi(p, j, X))))
    print(f"phi^{j}: vertex conditions hold = {ok}")
