"""Floating-point oracle for the exact pipeline.

Nothing here feeds back into exact code: coefficients are converted to
floats at evaluation time only.  Boundary samples come from a scrambled
Halton sequence seeded by ``(n, edge)``, so runs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

from scipy.stats import qmc

from .core import COS, MONOMIALS, Params, Region, Wave

T_MIN, T_MAX = 0.05, 6.0
CONDITIONS = ("vertex-continuity", "kirchhoff", "diag-continuity", "dbc")


@dataclass(frozen=True)
class EvalPoint:
    region: Region
    x: float
    y: float

    def __post_init__(self):
        if self.x < 0 or self.y < 0:
            raise ValueError("local coordinates are nonnegative")
        if self.region.kind == "lower" and not self.x > self.y:
            raise ValueError(f"{self.region.label} requires x > y")
        if self.region.kind == "upper" and not self.x < self.y:
            raise ValueError(f"{self.region.label} requires x < y")


def _chart(params: Params, vec: Sequence) -> Callable[[float, float], float]:
    """Float closure evaluating one chart's trig polynomial (also off the chart, by continuation)."""
    terms = []
    for m, v in zip(MONOMIALS, vec):
        if v:
            kx, ky = params.momenta(m.assign)
            fx = math.cos if m.tx == COS else math.sin
            fy = math.cos if m.ty == COS else math.sin
            terms.append((float(v), fx, float(kx), fy, float(ky)))

    def f(x: float, y: float) -> float:
        return math.fsum(v * fx(kx * x) * fy(ky * y) for v, fx, kx, fy, ky in terms)

    return f


def evaluate(w: Wave, point: EvalPoint) -> float:
    if not point.region.valid_for(w.params.n):
        raise ValueError(f"region {point.region} invalid for n={w.params.n}")
    return _chart(w.params, w.coeffs(point.region))(point.x, point.y)


def eigen_residual(w: Wave, point: EvalPoint, h: float) -> float:
    """|-(5-point Laplacian) - (k1^2 + k2^2)| at an interior point; O(h^2) for exact eigenfunctions."""
    x, y = point.x, point.y
    if min(x, y) <= 2 * h or (point.region.diagonal and abs(x - y) / math.sqrt(2) <= 2 * h):
        raise ValueError("finite-difference stencil crosses a region boundary")
    f = _chart(w.params, w.coeffs(point.region))
    centre = f(x, y)
    lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4 * centre) / (h * h)
    energy = float(w.params.k1 ** 2 + w.params.k2 ** 2)
    return abs(-lap - energy * centre)


def convergence_order(w: Wave, point: EvalPoint, h: float = 1e-3) -> float:
    return math.log2(eigen_residual(w, point, h) / eigen_residual(w, point, h / 2))


def sample_points(n: int, edge: int, samples: int) -> List[float]:
    """Reproducible low-discrepancy points in [T_MIN, T_MAX] for one boundary line."""
    u = qmc.Halton(d=1, scramble=True, seed=1000 * n + edge).random(samples)[:, 0]
    return [T_MIN + (T_MAX - T_MIN) * float(s) for s in u]


def _vertex_charts(w: Wave, side: str, fixed: int) -> List[Callable[[float, float], float]]:
    out = []
    for e in range(1, w.params.n + 1):
        if side == "x":
            region = Region.off(e, fixed) if e != fixed else Region.upper(e)
        else:
            region = Region.off(fixed, e) if e != fixed else Region.lower(e)
        out.append(_chart(w.params, w.coeffs(region)))
    return out


def _condition_samples(w: Wave, condition: str, samples: int, h: float) -> List[tuple]:
    """(residual, scale) pairs at every sample point for one condition."""
    p, n = w.params, w.params.n
    kmax = float(max(abs(p.k1), abs(p.k2)))
    out = []
    if condition in ("vertex-continuity", "kirchhoff"):
        for side in ("x", "y"):
            for fixed in range(1, n + 1):
                charts = _vertex_charts(w, side, fixed)
                for s in sample_points(n, fixed, samples):
                    at = (lambda f, z: f(z, s)) if side == "x" else (lambda f, z: f(s, z))
                    if condition == "vertex-continuity":
                        vals = [at(f, 0.0) for f in charts]
                        out.append((max(abs(v - vals[0]) for v in vals), max(abs(v) for v in vals)))
                    else:
                        vals = [at(f, 0.0) for f in charts]
                        slopes = [(at(f, h) - v) / h for f, v in zip(charts, vals)]
                        scale = max(max(abs(d) for d in slopes), kmax * max(abs(v) for v in vals))
                        out.append((abs(sum(slopes)), scale))
        return out
    c = float(p.c)
    for i in range(1, n + 1):
        up = _chart(p, w.coeffs(Region.upper(i)))
        lo = _chart(p, w.coeffs(Region.lower(i)))
        for t in sample_points(n, i, samples):
            vu, vl = up(t, t), lo(t, t)
            if condition == "diag-continuity":
                out.append((abs(vu - vl), max(abs(vu), abs(vl))))
                continue
            # (1/2)(d/dx - d/dy) is the derivative of s -> f(t + s/2, t - s/2)
            d_up = (vu - up(t - h / 2, t + h / 2)) / h
            d_lo = (lo(t + h / 2, t - h / 2) - vl) / h
            target = c * (vu + vl) / 2
            out.append((abs(d_up - d_lo - target), max(abs(target), abs(d_up), abs(d_lo))))
    return out


def sampled_condition_check(
    w: Wave, condition: str, samples: int = 50, h: float = 1e-4, relative: bool = False
) -> float:
    """Max residual of a condition over sampled boundary points.

    With ``relative`` the maximum is divided by the largest magnitude of the
    compared terms (for dbc: |c * value| and the two one-sided derivatives;
    for kirchhoff: the slopes and max|k| * |value|), unless that magnitude is below 1e-12.
    """
    if condition not in CONDITIONS:
        raise ValueError(f"unknown condition {condition!r}; expected one of {CONDITIONS}")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    pairs = _condition_samples(w, condition, samples, h)
    if not pairs:
        return 0.0
    worst = max(r for r, _ in pairs)
    if relative:
        scale = max(s for _, s in pairs)
        if scale > 1e-12:
            return worst / scale
    return worst


def interior_points(w: Wave, count: int, margin: float = 0.1) -> List[EvalPoint]:
    """Points inside supported charts, ordered by |value| descending, for stencil checks."""
    pts = []
    halton = qmc.Halton(d=2, scramble=True, seed=7919 * w.params.n).random(count * 4)
    support = w.support()
    if not support:
        return []
    for k, (u, v) in enumerate(halton):
        region = support[k % len(support)]
        x, y = margin + 4 * float(u), margin + 4 * float(v)
        if region.kind == "lower" and x - y < margin:
            x, y = max(x, y) + margin, min(x, y)
        elif region.kind == "upper" and y - x < margin:
            x, y = min(x, y), max(x, y) + margin
        pts.append(EvalPoint(region, x, y))
    pts.sort(key=lambda pt: -abs(evaluate(w, pt)))
    return pts[:count]


def numeric_report(w: Wave, h: float = 1e-4, samples: int = 50) -> Dict[str, float]:
    return {cond: sampled_condition_check(w, cond, samples, h, relative=True) for cond in CONDITIONS}
