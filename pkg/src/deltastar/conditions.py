"""Vertex and diagonal conditions as exact linear functionals on Waves.

Restrictions of the eight monomials to a boundary line are expanded in a
four-function basis, independent whenever |k1| != |k2| and both are
nonzero, so a condition holds as a function identity iff the four
coefficients vanish.

Diagonal basis (t the common coordinate on x = y):
    CC = cos(k1 t) cos(k2 t), CS = cos(k1 t) sin(k2 t),
    SC = sin(k1 t) cos(k2 t), SS = sin(k1 t) sin(k2 t)

Vertex basis (s the free coordinate):
    cos(k1 s), sin(k1 s), cos(k2 s), sin(k2 s)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .core import A12, COS, MONOMIALS, SIN, Params, Region, Wave, format_rational

DIAG_LABELS = ("CC", "CS", "SC", "SS")
VERTEX_LABELS = ("cos(k1 s)", "sin(k1 s)", "cos(k2 s)", "sin(k2 s)")

Vec4 = Tuple[Fraction, Fraction, Fraction, Fraction]
_Z4: Vec4 = (Fraction(0),) * 4


def _diag_slot(f1: str, f2: str) -> int:
    """Index of f1(k1 t) f2(k2 t) in the diagonal basis."""
    return 2 * (f1 == SIN) + (f2 == SIN)


def _d(f: str) -> Tuple[int, str]:
    # d/dz cos(kz) = -k sin(kz); d/dz sin(kz) = k cos(kz)
    return (-1, SIN) if f == COS else (1, COS)


@dataclass(frozen=True)
class DiagTrace:
    edge: int
    coeffs: Vec4

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "DiagTrace") -> "DiagTrace":
        return DiagTrace(self.edge, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DiagTrace") -> "DiagTrace":
        return DiagTrace(self.edge, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, q) -> "DiagTrace":
        return DiagTrace(self.edge, tuple(q * a for a in self.coeffs))

    def as_dict(self) -> Dict[str, str]:
        return {lab: format_rational(v) for lab, v in zip(DIAG_LABELS, self.coeffs)}


@dataclass(frozen=True)
class VertexTrace:
    side: str  # "x" (x_i = 0) or "y" (y_j = 0)
    fixed: int  # edge of the particle that is not at the vertex
    free: int  # edge of the particle at the vertex
    coeffs: Vec4


def _diag_restrict(params: Params, vec: Sequence[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * 4
    for m, v in zip(MONOMIALS, vec):
        if v:
            # A12: tx carries k1; A21: ty carries k1
            slot = _diag_slot(m.tx, m.ty) if m.assign == A12 else _diag_slot(m.ty, m.tx)
            out[slot] += v
    return out


def _diag_half_normal_derivative(params: Params, vec: Sequence[Fraction]) -> List[Fraction]:
    """(1/2)(d/dx - d/dy) of one chart's monomials, restricted to x = y."""
    out = [Fraction(0)] * 4
    for m, v in zip(MONOMIALS, vec):
        if not v:
            continue
        kx, ky = params.momenta(m.assign)
        sx, dtx = _d(m.tx)
        sy, dty = _d(m.ty)
        for tx, ty, w in ((dtx, m.ty, sx * kx * v), (m.tx, dty, -sy * ky * v)):
            slot = _diag_slot(tx, ty) if m.assign == A12 else _diag_slot(ty, tx)
            out[slot] += w / 2
    return out


def _side(w: Wave, i: int, side: str) -> Sequence[Fraction]:
    if side not in ("lower", "upper"):
        raise ValueError("side must be 'lower' or 'upper'")
    return w.coeffs(Region(side, i, i))


def _check_edge(w: Wave, i: int) -> None:
    if not 1 <= i <= w.params.n:
        raise IndexError(f"edge {i} out of range 1..{w.params.n}")


def diag_value(w: Wave, i: int, side: str) -> DiagTrace:
    """Restriction of the Lower (x > y) or Upper (x < y) chart of edge i to the diagonal."""
    _check_edge(w, i)
    return DiagTrace(i, tuple(_diag_restrict(w.params, _side(w, i, side))))


def diag_continuity(w: Wave, i: int) -> DiagTrace:
    """Upper-side value minus Lower-side value on the diagonal of edge i."""
    return diag_value(w, i, "upper") - diag_value(w, i, "lower")


def diag_mean_value(w: Wave, i: int) -> DiagTrace:
    return (diag_value(w, i, "upper") + diag_value(w, i, "lower")).scaled(Fraction(1, 2))


def diag_jump(w: Wave, i: int) -> DiagTrace:
    """Jump of (1/2)(d/dx - d/dy) across the diagonal of edge i, Upper side minus Lower side.

    With this orientation the c-dependent non-smooth family satisfies
    jump = c * value.
    """
    _check_edge(w, i)
    up = _diag_half_normal_derivative(w.params, _side(w, i, "upper"))
    lo = _diag_half_normal_derivative(w.params, _side(w, i, "lower"))
    return DiagTrace(i, tuple(a - b for a, b in zip(up, lo)))


class DiscontinuityError(ValueError):
    """Raised when a defect is requested for a Wave that is discontinuous on the diagonal."""

    def __init__(self, residuals: List[DiagTrace]):
        self.residuals = residuals
        bad = [r.edge for r in residuals if not r.is_zero()]
        detail = "; ".join(f"edge {r.edge}: {r.as_dict()}" for r in residuals if not r.is_zero())
        super().__init__(f"Wave is discontinuous on the diagonal of edges {bad}: {detail}")


def defect(w: Wave) -> List[DiagTrace]:
    """Per edge, jump / c minus the diagonal value; defined only for diagonally continuous Waves."""
    n, c = w.params.n, w.params.c
    cont = [diag_continuity(w, i) for i in range(1, n + 1)]
    if any(not r.is_zero() for r in cont):
        raise DiscontinuityError(cont)
    return [diag_jump(w, i).scaled(1 / c) - diag_value(w, i, "lower") for i in range(1, n + 1)]


def dbc_residual(w: Wave) -> List[DiagTrace]:
    """Per edge, jump - c * value, the value being the mean of the two sides.

    Zero together with zero ``diag_continuity`` means the delta condition holds.
    """
    c = w.params.c
    return [
        diag_jump(w, i) - diag_mean_value(w, i).scaled(c)
        for i in range(1, w.params.n + 1)
    ]


# -- vertex --------------------------------------------------------------


def _vertex_trace(params: Params, vec: Sequence[Fraction], side: str, derivative: bool) -> List[Fraction]:
    """Trace at x = 0 (side 'x') or y = 0 (side 'y') in the vertex basis of the free coordinate."""
    out = [Fraction(0)] * 4
    for m, v in zip(MONOMIALS, vec):
        if not v:
            continue
        kx, ky = params.momenta(m.assign)
        if side == "x":
            at_zero, remaining, k_at, k_free = m.tx, m.ty, kx, ky
        else:
            at_zero, remaining, k_at, k_free = m.ty, m.tx, ky, kx
        if derivative:
            # d/dz cos -> 0 at z=0, d/dz sin -> k
            if at_zero != SIN:
                continue
            v = v * k_at
        elif at_zero != COS:
            continue
        slot = (0 if k_free == params.k1 else 2) + (remaining == SIN)
        out[slot] += v
    return out


def _vertex_regions(n: int, side: str, fixed: int) -> List[Tuple[int, Region]]:
    """(edge at the vertex, region) pairs meeting the vertex line for one fixed edge."""
    out = []
    for e in range(1, n + 1):
        if side == "x":
            # x on edge e at 0, y on edge `fixed`; on Q_jj the point x=0 < y is Upper
            region = Region.off(e, fixed) if e != fixed else Region.upper(e)
        else:
            region = Region.off(fixed, e) if e != fixed else Region.lower(e)
        out.append((e, region))
    return out


@dataclass(frozen=True)
class Residual:
    condition: str
    location: str
    coeffs: Vec4
    labels: Tuple[str, ...] = DIAG_LABELS

    @property
    def passed(self) -> bool:
        return not any(self.coeffs)

    def as_dict(self) -> Dict[str, object]:
        return {
            "condition": self.condition,
            "location": self.location,
            "coeffs": [format_rational(v) for v in self.coeffs],
            "pass": self.passed,
        }


def vertex_residuals(w: Wave) -> List[Residual]:
    """Vertex continuity and Kirchhoff residuals for every column (x at vertex) and row (y at vertex)."""
    p, n = w.params, w.params.n
    out: List[Residual] = []
    for side, name, pos in (("x", "column", "x"), ("y", "row", "y")):
        for fixed in range(1, n + 1):
            pairs = _vertex_regions(n, side, fixed)
            values = [_vertex_trace(p, w.coeffs(r), side, False) for _, r in pairs]
            ref = values[0]
            for (e, _), val in zip(pairs[1:], values[1:]):
                out.append(Residual(
                    f"vertex-continuity-{pos}", f"{name} {fixed}, edge {e} vs edge 1",
                    tuple(a - b for a, b in zip(val, ref)), VERTEX_LABELS,
                ))
            total = [Fraction(0)] * 4
            for _, r in pairs:
                for k, v in enumerate(_vertex_trace(p, w.coeffs(r), side, True)):
                    total[k] += v
            out.append(Residual(f"kirchhoff-{pos}", f"{name} {fixed}", tuple(total), VERTEX_LABELS))
    return out


def diagonal_residuals(w: Wave) -> List[Residual]:
    out = []
    for i in range(1, w.params.n + 1):
        out.append(Residual("diag-continuity", f"edge {i}", diag_continuity(w, i).coeffs))
    for r in dbc_residual(w):
        out.append(Residual("dbc", f"edge {r.edge}", r.coeffs))
    return out


def residual_report(w: Wave) -> List[Residual]:
    return vertex_residuals(w) + diagonal_residuals(w)


def satisfies_vertex_conditions(w: Wave) -> bool:
    return all(r.passed for r in vertex_residuals(w))


def is_solution(w: Wave) -> bool:
    """All vertex, continuity and delta-jump conditions hold exactly."""
    return all(r.passed for r in residual_report(w))
