from fractions import Fraction

import pytest

from fmethod.engine import (
    _SolveContext,
    classify,
    classify_ido_cell,
    classify_sl_cell,
    equivariant_basis,
    ido_symbol_vector,
    psi_vector,
    same_solution_span,
    solve_fsystem,
    solve_fsystem_full_nilradical,
    weight_degree_cap,
)
from fmethod.rep import ScalarRepParams, TargetRepParams


def sl_pair(n, lam, m, ell, alpha=0):
    lam = Fraction(lam)
    nu = lam + m + Fraction(n, n - 1) * ell
    beta = (alpha + m + ell) % 2
    return (
        ScalarRepParams.sl(n, lam, alpha),
        TargetRepParams.sl(n, nu, ell=ell, beta=beta),
        nu,
    )


def test_solution_family_one():
    src, tgt, nu = sl_pair(3, Fraction(5), 1, 0)
    sol = solve_fsystem(src, tgt, weight_degree_cap(nu - Fraction(5)))
    assert sol.dim == 1
    assert same_solution_span(sol.basis, [psi_vector(1, 0, 3)])


def test_solution_family_two():
    src, tgt, nu = sl_pair(3, Fraction(-2), 2, 1)
    sol = solve_fsystem(src, tgt, weight_degree_cap(nu - Fraction(-2)))
    assert sol.dim == 1
    assert same_solution_span(sol.basis, [psi_vector(2, 1, 3)])


def test_generic_lambda_gives_nothing_for_positive_ell():
    src, tgt, nu = sl_pair(3, Fraction(1, 3), 2, 1)
    sol = solve_fsystem(src, tgt, weight_degree_cap(nu - Fraction(1, 3)))
    assert sol.dim == 0


def test_doubled_solution_n2():
    m, ell = 1, 1
    lam, nu = Fraction(1 - (m + ell)), Fraction(1 + ell)
    src = ScalarRepParams.sl(2, lam, 0)
    tgt = TargetRepParams.sl(2, nu, ell=0, beta=(0 + m) % 2)
    sol = solve_fsystem(src, tgt, weight_degree_cap(nu - lam))
    assert sol.dim == 2
    # basis zeta2^{m+2l}, zeta2^m zeta1^l in two different homogeneous degrees
    assert sorted(sol.degrees) == [2, 3]


def test_mismatched_sign_kills_solutions():
    m, ell = 1, 1
    lam, nu = Fraction(-1), Fraction(2)
    src = ScalarRepParams.sl(2, lam, 0)
    tgt = TargetRepParams.sl(2, nu, ell=0, beta=(1 + m) % 2)
    assert solve_fsystem(src, tgt, 3).dim == 0


def test_aprime_only_step_space_count():
    # dim Hom_{A'} = [k/2] + 1 at nu - lambda = k, n = 2
    k = 5
    lam = Fraction(7, 5)
    src = ScalarRepParams.sl(2, lam, 0)
    tgt = TargetRepParams.sl(2, lam + k, ell=0, beta=0)
    ctx = _SolveContext(src, tgt, connected=True)
    total = 0
    for d in range(k + 1):
        unknowns = ctx.unknowns_at_degree(d)
        total += len(ctx.equivariant_vectors(unknowns))
    assert total == k // 2 + 1


def test_aprime_weight_mismatch_is_empty():
    # nu - lambda not a half-grid value: no equivariant vectors at all
    src = ScalarRepParams.sl(2, Fraction(0), 0)
    tgt = TargetRepParams.sl(2, Fraction(1, 7), ell=0, beta=0)
    assert solve_fsystem(src, tgt, 5).dim == 0


def test_equivariant_basis_model_vector():
    # n=3, ell=1, m=1: the equivariant line is spanned by psi_(1,1)
    lam = Fraction(2, 3)
    nu = lam + 1 + Fraction(3, 2)
    src = ScalarRepParams.sl(3, lam, 0)
    tgt = TargetRepParams.sl(3, nu, ell=1, beta=0)
    eq = equivariant_basis(src, tgt, 2)
    assert eq.dim == 1
    assert same_solution_span(eq.basis, [psi_vector(1, 1, 3)])
    assert eq.witness_split() == [(1, 1)]


def test_solutions_are_homogeneous():
    src, tgt, nu = sl_pair(3, Fraction(-2), 2, 1)
    sol = solve_fsystem(src, tgt, weight_degree_cap(nu + 2))
    for vvp in sol.basis:
        degs = {sum(mono) for p in vvp.components.values() for mono in p.terms}
        assert len(degs) == 1


def test_full_nilradical_examples():
    # k = 1 at lambda = 0: the gradient symbol
    src = ScalarRepParams.sl(2, Fraction(0), 0)
    tgt = TargetRepParams.sl(2, Fraction(3, 2), ell=1, beta=1)
    sol = solve_fsystem_full_nilradical(src, tgt, 1)
    assert sol.dim == 1
    assert same_solution_span(sol.basis, [ido_symbol_vector(1, 2)])
    # generic lambda, k >= 1: empty
    src = ScalarRepParams.sl(2, Fraction(1, 3), 0)
    tgt = TargetRepParams.sl(2, Fraction(1, 3) + Fraction(3, 2), ell=1, beta=1)
    assert solve_fsystem_full_nilradical(src, tgt, 1).dim == 0
    # k = 0: the identity symbol
    src = ScalarRepParams.sl(2, Fraction(5), 0)
    tgt = TargetRepParams.sl(2, Fraction(5), ell=0, beta=0)
    sol = solve_fsystem_full_nilradical(src, tgt, 0)
    assert sol.dim == 1


def test_weight_degree_cap():
    assert weight_degree_cap(Fraction(7, 2)) == 3
    assert weight_degree_cap(Fraction(4)) == 4
    assert weight_degree_cap(Fraction(-1)) == -1


@pytest.mark.parametrize("n", [2, 3])
def test_small_scan_consistency(n):
    rows = classify(n, m_max=2, l_max=2)
    assert all(r["ok"] for r in rows)
    if n == 2:
        for r in rows:
            if r["computed_dim"] == 2:
                assert r["predicted_dim"] == 2
    else:
        assert {r["computed_dim"] for r in rows} <= {0, 1}


def test_sign_consistency_over_scan():
    # solutions only appear when beta = alpha + (m + ell)
    rows = classify(3, m_max=2, l_max=1)
    hits = 0
    for r in rows:
        if r["computed_dim"] > 0:
            lam, nu = Fraction(r["lambda"]), Fraction(r["nu"])
            m = nu - lam - Fraction(3, 2) * r["l"]
            assert m.denominator == 1 and m >= 0
            expected = (["+", "-"].index(r["alpha"]) + int(m) + r["l"]) % 2
            assert r["beta"] == ["+", "-"][expected]
            hits += 1
    assert hits > 0


def test_ido_cells():
    row = classify_ido_cell(2, (3, Fraction(-2), None))
    assert row["ok"] and row["computed_dim"] == 1
    row = classify_ido_cell(3, (2, Fraction(1, 3), None))
    assert row["ok"] and row["computed_dim"] == 0
    row = classify_ido_cell(3, (2, Fraction(-1), None))
    assert row["ok"] and row["computed_dim"] == 1


def test_classify_table_deterministic():
    a = classify_sl_cell(3, (1, 1, Fraction(-1), 0, 0))
    b = classify_sl_cell(3, (1, 1, Fraction(-1), 0, 0))
    assert a == b


def test_negative_weight_gap_is_empty():
    src = ScalarRepParams.sl(2, Fraction(3), 0)
    tgt = TargetRepParams.sl(2, Fraction(2), ell=0, beta=0)
    assert solve_fsystem(src, tgt, weight_degree_cap(Fraction(-1))).dim == 0
