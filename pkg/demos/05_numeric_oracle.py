"""
Floating-point oracle
=====================

Independent sampled checks: finite-difference eigen-residuals converge at
second order, and one-sided differences confirm the jump condition.
"""

from fractions import Fraction

from deltastar.core import Params
from deltastar.numeric import convergence_order, eigen_residual, interior_points, numeric_report
from deltastar.solutions import family_nonsmooth

p = Params(4, Fraction(7, 3), Fraction(1, 2), Fraction(-5, 4))
for label, w in family_nonsmooth(p).members:
    pt = interior_points(w, 1)[0]
    print(label, pt.region.label, f"residual(h=1e-3)={eigen_residual(w, pt, 1e-3):.2e}",
          f"order={convergence_order(w, pt):.3f}")
    print("   relative sampled residuals:", {k: f"{v:.1e}" for k, v in numeric_report(w).items()})
