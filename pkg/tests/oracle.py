"""Independent symbolic oracle: rebuild a Wave's charts as sympy expressions."""

import sympy as sp

from deltastar.core import MONOMIALS, Region

x, y, t = sp.symbols("x y t", real=True)


def _q(v):
    return sp.Rational(v.numerator, v.denominator)


def chart_expr(w, region):
    p = w.params
    expr = sp.Integer(0)
    for m, v in zip(MONOMIALS, w.coeffs(region)):
        if v:
            kx, ky = (p.k1, p.k2) if m.assign == "12" else (p.k2, p.k1)
            fx = sp.cos if m.tx == "C" else sp.sin
            fy = sp.cos if m.ty == "C" else sp.sin
            expr += _q(v) * fx(_q(kx) * x) * fy(_q(ky) * y)
    return expr


def diag_basis(p):
    k1, k2 = _q(p.k1), _q(p.k2)
    return [
        sp.cos(k1 * t) * sp.cos(k2 * t),
        sp.cos(k1 * t) * sp.sin(k2 * t),
        sp.sin(k1 * t) * sp.cos(k2 * t),
        sp.sin(k1 * t) * sp.sin(k2 * t),
    ]


def trace_expr(p, coeffs):
    return sum((_q(c) * b for c, b in zip(coeffs, diag_basis(p))), sp.Integer(0))


def jump_expr(w, i):
    def half_normal(region):
        f = chart_expr(w, region)
        return ((sp.diff(f, x) - sp.diff(f, y)) / 2).subs({x: t, y: t})
    return half_normal(Region.upper(i)) - half_normal(Region.lower(i))


def value_expr(w, region):
    return chart_expr(w, region).subs({x: t, y: t})


def agree(a, b, points=(sp.Rational(1, 3), sp.Rational(7, 5), sp.Rational(29, 11), sp.Integer(5))):
    """Numeric agreement at 40 digits on several points."""
    return all(abs(sp.N((a - b).subs(t, s), 40)) < sp.Float("1e-30") for s in points)
