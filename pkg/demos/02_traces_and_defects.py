"""
Diagonal traces, jumps and defects
==================================

Restricting a product state to the diagonal x = y gives four coefficients over
CC, CS, SC, SS.  The jump of (1/2)(d/dx - d/dy) across the diagonal and the
defect jump/c - value are linear maps into the same space.
"""

from fractions import Fraction

from deltastar.basis import build_Phi, build_Psi
from deltastar.conditions import DiscontinuityError, defect, diag_jump, diag_value
from deltastar.core import A12, A21, Params
from deltastar.solutions import closed_form_defects

p = Params(5, Fraction(7, 3), Fraction(1, 2), Fraction(-5, 4))
n = p.n

pair = build_Phi(p, n, 0, A12) + build_Phi(p, 0, n, A21)
print("value (lower):", diag_value(pair, 1, "lower").as_dict())
print("value (upper):", diag_value(pair, 1, "upper").as_dict())
print("jump:         ", diag_jump(pair, 1).as_dict())
print("defect:       ", defect(pair)[0].as_dict())

# The closed forms use a different jump normalization: factor -n/2
closed = closed_form_defects(p)[0]
print("closed form x (-n/2):", [str(Fraction(-n, 2) * v) for v in closed])

# Psi^1_12 - Psi^1_21 vanishes on the diagonal yet its derivative jumps
w = build_Psi(p, 1, A12) - build_Psi(p, 1, A21)
print("Psi combination jump on edge 1:", diag_jump(w, 1).as_dict())

# A defect is only defined for continuous functions
try:
    defect(build_Phi(p, 0, n, A12))
except DiscontinuityError as exc:
    print("rejected:", str(exc)[:80], "...")
