import random
from fractions import Fraction

import pytest

from conftest import make
from oracle import agree, jump_expr, trace_expr, value_expr
from deltastar.basis import SubbasisKind, X, build_Phi, build_Psi, generators, lift, phi, subbasis
from deltastar.conditions import (
    DiscontinuityError,
    dbc_residual,
    defect,
    diag_continuity,
    diag_jump,
    diag_value,
    residual_report,
    satisfies_vertex_conditions,
    vertex_residuals,
)
from deltastar.core import A12, A21, Region, Wave, linear_combination, mono_index
from deltastar.solutions import continuous_vectors, family_antisymmetric, family_off_diagonal, nonsmooth_member

CC, CS, SC, SS = range(4)


def pair4(p):
    n = p.n
    return build_Phi(p, n, 0, A12) + build_Phi(p, 0, n, A21)


def pair6(p):
    n = p.n
    return build_Phi(p, n, 0, A21) + build_Phi(p, 0, n, A12)


def cs2(p, i):
    return build_Psi(p, i, A12) - build_Psi(p, i, A21)


def vec(cc=0, cs=0, sc=0, ss=0):
    return tuple(Fraction(v) for v in (cc, cs, sc, ss))


@pytest.mark.parametrize("n", [2, 3, 4, 7])
def test_diag_value_examples(n):
    p = make(n)
    for i in range(1, n + 1):
        for side in ("lower", "upper"):
            assert diag_value(pair4(p), i, side).coeffs == vec(sc=2 - n)
            assert diag_value(build_Phi(p, 0, 0, A12), i, side).coeffs == vec(cc=1)
        if i < n:
            for side in ("lower", "upper"):
                assert diag_value(cs2(p, i), i, side).is_zero()


@pytest.mark.parametrize("n", [2, 3, 5])
def test_diag_jump_examples(n, which):
    p = make(n, which)
    k1, k2 = p.k1, p.k2
    for i in range(1, n + 1):
        assert diag_jump(pair4(p), i).coeffs == vec(cc=-n * k1, ss=-n * k2)
    for i in range(1, n):
        assert diag_jump(cs2(p, i), i).coeffs == vec(cs=2 * n * k1, sc=-2 * n * k2)
        assert diag_jump(cs2(p, i), i + 1).coeffs == vec(cs=-2 * n * k1, sc=2 * n * k2)
    for w in subbasis(p, SubbasisKind.CBAS):
        assert all(diag_jump(w, i).is_zero() for i in range(1, n + 1))


@pytest.mark.parametrize("n", [3, 4])
def test_traces_against_symbolic_oracle(n):
    p = make(n, 1)
    waves = [pair4(p), pair6(p), cs2(p, 1), nonsmooth_member(p, 1), build_Phi(p, n, 1, A21)]
    for w in waves:
        for i in range(1, n + 1):
            assert agree(jump_expr(w, i), trace_expr(p, diag_jump(w, i).coeffs))
            for side in ("lower", "upper"):
                assert agree(value_expr(w, Region(side, i, i)), trace_expr(p, diag_value(w, i, side).coeffs))


@pytest.mark.parametrize("n", range(2, 9))
def test_pair_defects(n, which):
    p = make(n, which)
    k1, k2, c = p.k1, p.k2, p.c
    for t in defect(pair4(p)):
        assert t.coeffs == vec(cc=-n * k1 / c, sc=n - 2, ss=-n * k2 / c)
    for t in defect(pair6(p)):
        assert t.coeffs == vec(cc=-n * k2 / c, cs=n - 2, ss=-n * k1 / c)


def test_cs2_defect(p4):
    n, k1, k2, c = 4, p4.k1, p4.k2, p4.c
    for i in range(1, n):
        for t in defect(cs2(p4, i)):
            sigma = 1 if t.edge == i else -1 if t.edge == i + 1 else 0
            assert t.coeffs == vec(cs=2 * n * sigma * k1 / c, sc=-2 * n * sigma * k2 / c)


def test_smooth_defect_is_minus_value(p3):
    w = build_Phi(p3, 1, 0, A21)
    for t in defect(w):
        assert t.coeffs == tuple(-v for v in diag_value(w, t.edge, "lower").coeffs)


def test_defect_rejects_discontinuous(p3):
    with pytest.raises(DiscontinuityError) as info:
        defect(build_Phi(p3, 0, 3, A12))
    assert any(not r.is_zero() for r in info.value.residuals)


def test_phi0n_alone_discontinuous(p3):
    assert not diag_continuity(build_Phi(p3, 0, 3, A12), 1).is_zero()


def test_dbc_examples(p3):
    for w in family_off_diagonal(p3).waves:
        assert all(r.is_zero() for r in dbc_residual(w))
    w = build_Phi(p3, 0, 0, A12) - build_Phi(p3, 0, 0, A21)
    assert all(r.is_zero() for r in dbc_residual(w))
    assert all(r.is_zero() for r in dbc_residual(nonsmooth_member(p3, 1)))


@pytest.mark.parametrize("n", range(2, 9))
def test_generators_satisfy_vertex_conditions(n):
    p = make(n)
    for label, w in generators(p):
        assert satisfies_vertex_conditions(w), label
    for j in range(n + 1):
        assert satisfies_vertex_conditions(lift(phi(p, j, X)))


def test_single_quadrant_violates_kirchhoff(p3):
    w = Wave(p3, {Region.off(1, 2): [0, 0, 1, 0, 0, 0, 0, 0]})
    bad = [r for r in vertex_residuals(w) if not r.passed]
    kirch = [r for r in bad if r.condition == "kirchhoff-x"]
    assert kirch and kirch[0].location == "column 2"
    # d/dx sin(k1 x) cos(k2 y) at x = 0 is k1 cos(k2 y)
    assert kirch[0].coeffs == (0, 0, p3.k1, 0)


def _random_combo(rng, p, waves):
    return linear_combination(p, [(Fraction(rng.randint(-5, 5), rng.randint(1, 4)), w) for w in waves])


@pytest.mark.parametrize("n", [3, 4])
def test_residuals_linear(n):
    p = make(n)
    rng = random.Random(n)
    gens = [w for _, w in generators(p)]
    for _ in range(5):
        a, b = _random_combo(rng, p, gens), _random_combo(rng, p, gens)
        q = Fraction(rng.randint(-7, 7), 3)
        combo = a + q * b
        for ra, rb, rc in zip(residual_report(a), residual_report(b), residual_report(combo)):
            assert rc.coeffs == tuple(x + q * y for x, y in zip(ra.coeffs, rb.coeffs))


@pytest.mark.parametrize("n", [3, 4])
def test_dbc_iff_zero_defect(n):
    p = make(n)
    rng = random.Random(100 + n)
    smooth = subbasis(p, SubbasisKind.CBAS)
    cont = [w for _, w in continuous_vectors(p)]
    sols = family_antisymmetric(p).waves + [nonsmooth_member(p, i) for i in range(1, n)]
    for k in range(40):
        pool = sols if k % 2 else smooth + cont
        w = _random_combo(rng, p, rng.sample(pool, min(4, len(pool))))
        dbc_ok = all(r.is_zero() for r in dbc_residual(w))
        assert dbc_ok == all(t.is_zero() for t in defect(w))
        if k % 2:
            assert dbc_ok


def test_phin_lift_kirchhoff(p4):
    w = lift(phi(p4, 4, X))
    assert all(r.passed for r in vertex_residuals(w) if r.condition.startswith("kirchhoff"))
    assert not all(r.is_zero() for r in [diag_continuity(w, i) for i in range(1, 5)])
