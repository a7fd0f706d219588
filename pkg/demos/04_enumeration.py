"""
Exhaustive enumeration
======================

The product ansatz over CBas + DBas turns the diagonal conditions into a
finite rational linear system.  Its kernel is every solution of this form.
"""

from fractions import Fraction
import time

from deltastar.core import Params
from deltastar.solutions import certify, certify_completeness, redundant_nullity

p3 = Params(3, Fraction(3, 2), Fraction(5, 7), 2)
print("redundant formulation at n=3 (rows, columns, nullity):", redundant_nullity(p3))

for n in range(2, 9):
    t0 = time.time()
    rep = certify_completeness(Params(n, Fraction(3, 2), Fraction(5, 7), 2))
    print(
        f"n={n}: nullity {rep['nullity']:3d}, families span {rep['union_rank']:3d}, "
        f"equal={rep['span_equal']}, extra={rep['extra_dimensions']}  ({time.time() - t0:.1f}s)"
    )

# n = 2 has two more kernel directions than the families: the mixed term of
# the pair defects carries a factor (n - 2) and vanishes on the line
rep = certify(Params(2, Fraction(3, 2), Fraction(5, 7), 2))
print("n=2 pair usage in zero-defect combinations:", rep["defect_analysis"]["uses_phi_n0_pairs"])
