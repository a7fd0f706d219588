"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed even
without ``-s``.
"""

import random
from fractions import Fraction

import pytest

from conftest import GENERIC
from deltastar.basis import SubbasisKind, coord_matrix, redundant_generators, subbasis
from deltastar.conditions import defect, is_solution
from deltastar.core import A12, A21, Params
from deltastar.basis import build_Phi
from deltastar.linalg import rank
from deltastar.numeric import convergence_order, interior_points, sampled_condition_check
from deltastar.solutions import (
    all_families,
    certify_completeness,
    continuous_nonsmooth_subspace,
    defect_range_analysis,
    redundant_nullity,
)

NS = range(2, 9)
KINDS = (
    SubbasisKind.SMOOTH_SYMMETRIC,
    SubbasisKind.SMOOTH_ANTISYMMETRIC,
    SubbasisKind.NONSMOOTH_SYMMETRIC,
    SubbasisKind.NONSMOOTH_ANTISYMMETRIC,
)


def printed_defects(n, k1, k2, c):
    """The two closed-form defect expressions over (CC, CS, SC, SS), as printed."""
    mix = 2 * (Fraction(2, n) - 1)
    return (
        (2 * k1 / c, 0, mix, 2 * k2 / c),
        (2 * k2 / c, mix, 0, 2 * k1 / c),
    )


def summarize(p):
    n = p.n
    out = {"dims": [len(subbasis(p, k)) for k in KINDS]}
    fams = all_families(p)
    out["counts"] = [len(f) for f in fams]
    out["members_ok"] = all(is_solution(w) for f in fams for w in f.waves)
    comp = certify_completeness(p)
    out["nullity"] = comp["nullity"]
    out["span_equal"] = comp["span_equal"]
    out["union_rank"] = comp["union_rank"]

    scale = Fraction(-n, 2)
    pairs = [
        build_Phi(p, n, 0, A12) + build_Phi(p, 0, n, A21),
        build_Phi(p, n, 0, A21) + build_Phi(p, 0, n, A12),
    ]
    out["defects_ok"] = all(
        t.coeffs == tuple(scale * Fraction(v) for v in ref)
        for w, ref in zip(pairs, printed_defects(n, p.k1, p.k2, p.c))
        for t in defect(w)
    )
    cont = continuous_nonsmooth_subspace(p)
    out["cont_dim"] = cont["dimension"]
    out["cont_span"] = cont["span_equal"]
    ana = defect_range_analysis(p)
    out["pair_uses"] = ana["uses_phi_n0_pairs"]
    out["ns_rank"] = ana["nonsmooth_rank"]
    out["matches_eq"] = ana["matches_nonsmooth_family"]
    if n == 3:
        rows, cols, null = redundant_nullity(p)
        red_rank = rank(coord_matrix([w for _, w in redundant_generators(p)], p))
        out["redundant"] = (rows, cols, red_rank, null)
    return out


@pytest.fixture(scope="module")
def runs():
    return {
        which: {n: summarize(Params(n, *GENERIC[which])) for n in NS}
        for which in (0, 1)
    }


def report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, detail


def test_criterion_01_subbasis_dimensions(runs, capsys):
    ok = all(
        runs[w][n]["dims"] == [(n - 1) ** 2 + 1, 2 * (n - 1), n - 1, 2]
        for w in runs for n in NS
    )
    report(capsys, 1, ok, "subbasis dims (n-1)^2+1, 2(n-1), n-1, 2 for n=2..8")


def test_criterion_02_family_counts(runs, capsys):
    ok = True
    for w in runs:
        for n in NS:
            off, anti, ns = runs[w][n]["counts"]
            ok &= ns == n - 1
            if n >= 3:
                ok &= off == 2 * n * n - 6 * n + 2 and anti == 3 * n - 1
            else:
                ok &= anti == 4
    report(capsys, 2, ok, "family counts 2n^2-6n+2, 3n-1, n-1 (n>=3); 4 antisymmetric at n=2")


def test_criterion_03_members_exact(runs, capsys):
    ok = all(runs[w][n]["members_ok"] for w in runs for n in NS)
    report(capsys, 3, ok, "all family members pass vertex, Kirchhoff, diagonal continuity and jump conditions exactly, both Params sets")


def test_criterion_04_enumeration(runs, capsys):
    ok = all(
        runs[w][n]["nullity"] == 2 * n * n - 2 * n and runs[w][n]["span_equal"]
        and runs[w][n]["union_rank"] == 2 * n * n - 2 * n
        for w in runs for n in range(3, 9)
    )
    report(capsys, 4, ok, "nullity 2n^2-2n and family span equals kernel for n=3..8")


def test_criterion_05_redundant_n3(runs, capsys):
    ok = all(runs[w][3]["redundant"] == (24, 32, 26, 18) for w in runs)
    report(capsys, 5, ok, f"n=3 redundant system (rows, cols, rank, nullity) = {runs[0][3]['redundant']}")


def test_criterion_06_defect_expressions(runs, capsys):
    ok = all(runs[w][n]["defects_ok"] for w in runs for n in NS)
    report(capsys, 6, ok, "pair defects equal (-n/2) x closed forms, coefficientwise, n=2..8")


def test_criterion_07_continuous_subspace(runs, capsys):
    ok = all(runs[w][n]["cont_dim"] == n + 1 and runs[w][n]["cont_span"] for w in runs for n in NS)
    report(capsys, 7, ok, "continuous subspace of span(DBas) has dim n+1 and equals the explicit span, n=2..8")


def test_criterion_08_null_intersection(runs, capsys):
    ok = all(
        runs[w][n]["pair_uses"] == 0 and runs[w][n]["ns_rank"] == n - 1 and runs[w][n]["matches_eq"]
        for w in runs for n in range(3, 9)
    )
    report(capsys, 8, ok, "no zero-defect combination uses the Phi^{n0}/Phi^{0n} pairs; n-1 Psi combinations match the non-smooth family, n=3..8")


def test_criterion_09_genericity(runs, capsys):
    def integers(s):
        return {k: v for k, v in s.items() if not isinstance(v, bool)}

    ok = all(integers(runs[0][n]) == integers(runs[1][n]) for n in NS)
    report(capsys, 9, ok, "dims, counts, ranks and nullities identical under both Params sets")


def test_criterion_10_numeric_oracle(capsys):
    rng = random.Random(10)
    members = [
        w for n in (3, 4) for which in (0, 1)
        for f in all_families(Params(n, *GENERIC[which])) for w in f.waves
    ]
    orders = [convergence_order(w, interior_points(w, 1)[0], 1e-3) for w in rng.sample(members, 20)]
    order_ok = all(1.8 <= o <= 2.2 for o in orders)
    dbc = [
        sampled_condition_check(w, "dbc", 50, 1e-4, relative=True)
        for n in (3, 4) for which in (0, 1)
        for w in all_families(Params(n, *GENERIC[which]))[2].waves
    ]
    dbc_ok = all(r < 1e-2 for r in dbc)
    report(
        capsys, 10, order_ok and dbc_ok,
        f"eigen-residual order in [{min(orders):.3f}, {max(orders):.3f}] within [1.8, 2.2]; "
        f"max relative dbc residual {max(dbc):.2e} < 1e-2 at h=1e-4 (n=3,4)",
    )
