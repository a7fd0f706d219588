"""One-particle states on the cut space and the two-particle product bases.

A one-particle state is a profile ``a*cos(k z) + b*sin(k z)`` per edge, where
z is the particle's own coordinate.  The profile may depend on where the
other particle sits, which is what makes the state non-smooth across the
diagonal.  Three contexts are tracked per edge:

``DIFF``     the other particle is on a different edge
``GREATER``  same edge, own coordinate larger than the other one
``LESS``     same edge, own coordinate smaller

Momenta are not bound here; ``product`` attaches (k1, k2) or (k2, k1).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from .core import A12, A21, COS, SIN, Params, Region, Wave, coord_length, mono_index, regions, to_coords
from .linalg import RatMatrix, rank

X, Y = "x", "y"
DIFF, GREATER, LESS = 0, 1, 2
ASSIGNMENTS = (A12, A21)

Pair = Tuple[Fraction, Fraction]  # (cos coefficient, sin coefficient)


@dataclass(frozen=True)
class OneParticleState:
    params: Params
    particle: str
    # profiles[e - 1][context] = (cos coefficient, sin coefficient)
    profiles: Tuple[Tuple[Pair, Pair, Pair], ...]

    def on(self, edge: int, context: int) -> Pair:
        return self.profiles[edge - 1][context]

    @property
    def smooth(self) -> bool:
        return all(p[0] == p[1] == p[2] for p in self.profiles)

    def scaled(self, q) -> "OneParticleState":
        q = Fraction(q)
        return OneParticleState(
            self.params, self.particle,
            tuple(tuple((q * c, q * s) for c, s in ctx) for ctx in self.profiles),
        )

    def __add__(self, other: "OneParticleState") -> "OneParticleState":
        if (self.params, self.particle) != (other.params, other.particle):
            raise ValueError("states belong to different particles or parameters")
        return OneParticleState(
            self.params, self.particle,
            tuple(
                tuple((c1 + c2, s1 + s2) for (c1, s1), (c2, s2) in zip(p, q))
                for p, q in zip(self.profiles, other.profiles)
            ),
        )

    def __sub__(self, other: "OneParticleState") -> "OneParticleState":
        return self + other.scaled(-1)


def _uniform(params: Params, particle: str, per_edge: Sequence[Pair]) -> OneParticleState:
    return OneParticleState(params, particle, tuple((p, p, p) for p in per_edge))


def _check_particle(particle: str) -> None:
    if particle not in (X, Y):
        raise ValueError(f"particle must be {X!r} or {Y!r}")


def scattering_matrix(n: int) -> List[List[Fraction]]:
    """S = 2P - I with P the projection onto (1, ..., 1)."""
    return [[Fraction(2, n) - (i == j) for j in range(n)] for i in range(n)]


def scattering_state(params: Params, l: int, particle: str = X) -> Tuple[OneParticleState, OneParticleState]:
    """Real and imaginary parts of the vertex scattering state with incoming edge ``l``.

    On edge j it is delta_lj e^{ikz} + S_lj e^{-ikz}
    = (delta_lj + S_lj) cos(kz) + i (delta_lj - S_lj) sin(kz).
    """
    n = params.n
    if not 1 <= l <= n:
        raise IndexError(f"edge index {l} out of range 1..{n}")
    _check_particle(particle)
    S = scattering_matrix(n)
    zero = Fraction(0)
    re, im = [], []
    for j in range(1, n + 1):
        d = Fraction(int(l == j))
        s = S[l - 1][j - 1]
        re.append((d + s, zero))
        im.append((zero, d - s))
    return _uniform(params, particle, re), _uniform(params, particle, im)


def complex_combination(
    terms: Sequence[Tuple[Tuple[Fraction, Fraction], Tuple[OneParticleState, OneParticleState]]]
) -> Tuple[OneParticleState, OneParticleState]:
    """Sum of (a + ib) * (re + i im) over terms, returned as (real part, imaginary part)."""
    re = im = None
    for (a, b), (sr, si) in terms:
        tr = sr.scaled(a) - si.scaled(b)
        ti = si.scaled(a) + sr.scaled(b)
        re = tr if re is None else re + tr
        im = ti if im is None else im + ti
    return re, im


def phi(params: Params, j: int, particle: str = X) -> OneParticleState:
    """The basis states phi^0 .. phi^n.

    phi^0 is cos on every edge, phi^j (1 <= j < n) is sin on edge j and -sin
    on edge j+1, and phi^n is sin except for the factor (1 - n) when the
    particle sits below the other one on a shared edge.  The y particle uses
    the mirrored convention (its own coordinate below x's).
    """
    n = params.n
    if not 0 <= j <= n:
        raise IndexError(f"state index {j} out of range 0..{n}")
    _check_particle(particle)
    one, zero = Fraction(1), Fraction(0)
    if j == 0:
        return _uniform(params, particle, [(one, zero)] * n)
    if j < n:
        return _uniform(
            params, particle,
            [(zero, Fraction((e == j) - (e == j + 1))) for e in range(1, n + 1)],
        )
    s, low = (zero, one), (zero, Fraction(1 - n))
    return OneParticleState(params, particle, tuple((s, s, low) for _ in range(n)))


def _contexts(region: Region) -> Tuple[int, int, int, int]:
    """(x edge, x context, y edge, y context) for a region."""
    if region.kind == "off":
        return region.i, DIFF, region.j, DIFF
    if region.kind == "lower":  # x > y
        return region.i, GREATER, region.i, LESS
    return region.i, LESS, region.i, GREATER


def product(sx: OneParticleState, sy: OneParticleState, assign: str) -> Wave:
    """Two-particle product state sx(x) * sy(y) with momenta given by ``assign``."""
    if sx.params != sy.params:
        raise ValueError("states bound to different parameters")
    if sx.particle != X or sy.particle != Y:
        raise ValueError("product expects an x state and a y state")
    if assign not in ASSIGNMENTS:
        raise ValueError(f"unknown momentum assignment {assign!r}")
    coeffs = {}
    for region in regions(sx.params.n):
        ex, cx, ey, cy = _contexts(region)
        ax = dict(zip((COS, SIN), sx.on(ex, cx)))
        ay = dict(zip((COS, SIN), sy.on(ey, cy)))
        vec = [Fraction(0)] * 8
        for tx in (COS, SIN):
            for ty in (COS, SIN):
                vec[mono_index(tx, ty, assign)] = ax[tx] * ay[ty]
        coeffs[region] = vec
    return Wave(sx.params, coeffs)


def lift(state: OneParticleState, assign: str = A12) -> Wave:
    """Two-particle Wave of a one-particle state times phi^0 of the other particle."""
    if state.particle == X:
        return product(state, phi(state.params, 0, Y), assign)
    return product(phi(state.params, 0, X), state, assign)


def build_Phi(params: Params, i: int, j: int, assign: str) -> Wave:
    return product(phi(params, i, X), phi(params, j, Y), assign)


def build_Psi(params: Params, i: int, assign: str) -> Wave:
    if not 1 <= i <= params.n - 1:
        raise IndexError(f"Psi index {i} out of range 1..{params.n - 1}")
    n = params.n
    return build_Phi(params, i, n, assign) - build_Phi(params, n, i, assign)


class SubbasisKind(Enum):
    SMOOTH_SYMMETRIC = "smooth-symmetric"
    SMOOTH_ANTISYMMETRIC = "smooth-antisymmetric"
    NONSMOOTH_SYMMETRIC = "nonsmooth-symmetric"
    NONSMOOTH_ANTISYMMETRIC = "nonsmooth-antisymmetric"
    CBAS = "cbas"
    DBAS = "dbas"


Labelled = List[Tuple[str, Wave]]


def phi_label(i: int, j: int, assign: str) -> str:
    return f"Phi^{{{i},{j}}}_{assign}"


def psi_label(i: int, assign: str) -> str:
    return f"Psi^{{{i}}}_{assign}"


def labelled_subbasis(params: Params, kind: SubbasisKind) -> Labelled:
    """Generators of a subbasis, with labels, in a fixed order.

    The four symmetry classes use the (k1, k2) assignment only; CBAS and DBAS
    carry both assignments, A12 before A21 for each index.
    """
    n = params.n
    P = lambda i, j, a=A12: (phi_label(i, j, a), build_Phi(params, i, j, a))  # noqa: E731
    if kind is SubbasisKind.SMOOTH_SYMMETRIC:
        return [P(0, 0)] + [P(i, j) for i in range(1, n) for j in range(1, n)]
    if kind is SubbasisKind.SMOOTH_ANTISYMMETRIC:
        return [g for i in range(1, n) for g in (P(0, i), P(i, 0))]
    if kind is SubbasisKind.NONSMOOTH_SYMMETRIC:
        return [(psi_label(i, A12), build_Psi(params, i, A12)) for i in range(1, n)]
    if kind is SubbasisKind.NONSMOOTH_ANTISYMMETRIC:
        return [P(0, n), P(n, 0)]
    if kind is SubbasisKind.CBAS:
        return [P(i, j, a) for i in range(n) for j in range(n) for a in ASSIGNMENTS]
    if kind is SubbasisKind.DBAS:
        out = [(psi_label(i, a), build_Psi(params, i, a)) for i in range(1, n) for a in ASSIGNMENTS]
        return out + [P(0, n, A12), P(0, n, A21), P(n, 0, A12), P(n, 0, A21)]
    raise ValueError(f"unknown subbasis kind {kind!r}")


def subbasis(params: Params, kind: SubbasisKind) -> List[Wave]:
    return [w for _, w in labelled_subbasis(params, kind)]


def generators(params: Params) -> Labelled:
    """CBas followed by DBas: the independent generating set of size 2n^2 + 2n + 2."""
    return labelled_subbasis(params, SubbasisKind.CBAS) + labelled_subbasis(params, SubbasisKind.DBAS)


def redundant_generators(params: Params) -> Labelled:
    """All Phi^{ij}_a with i, j in 0..n: 2(n+1)^2 generators, 2n of them dependent."""
    n = params.n
    return [
        (phi_label(i, j, a), build_Phi(params, i, j, a))
        for i in range(n + 1) for j in range(n + 1) for a in ASSIGNMENTS
    ]


def coord_matrix(waves: Sequence[Wave], params: Params) -> RatMatrix:
    return RatMatrix([to_coords(w) for w in waves], coord_length(params.n))


def verify_dependencies(params: Params) -> bool:
    """Phi^{nn} and Phi^{in} + Phi^{ni} lie in the span of CBas, and the redundant set has full expected rank."""
    n = params.n
    cbas = subbasis(params, SubbasisKind.CBAS)
    dependent = []
    for a in ASSIGNMENTS:
        dependent.append(build_Phi(params, n, n, a))
        dependent += [build_Phi(params, i, n, a) + build_Phi(params, n, i, a) for i in range(1, n)]
    # all of them at once: rank does not grow iff each lies in the span
    if rank(coord_matrix(cbas + dependent, params)) != rank(coord_matrix(cbas, params)):
        return False
    red = redundant_generators(params)
    if len(red) != 2 * (n + 1) ** 2:
        return False
    return rank(coord_matrix([w for _, w in red], params)) == 2 * n * n + 2 * n + 2
