import itertools
from fractions import Fraction

import pytest

from fmethod.algebra import Polynomial, monomials_up_to
from fmethod.liealg import bracket, parabolic
from fmethod.rep import (
    ScalarRepParams,
    TargetRepParams,
    VectorValuedPolynomial,
    dpi_hat,
    dpi_lambda,
    dpi_lambda_star,
    dpi_target,
    nminus_closed_form,
    nplus_closed_form,
)
from fmethod.weyl import WeylElement


def test_dpi_lambda_closed_forms():
    n, lam = 3, Fraction(2)
    params = ScalarRepParams.sl(n, lam)
    pd = parabolic(n)
    for j in range(1, n + 1):
        assert dpi_lambda(pd.n_plus(j), params) == nplus_closed_form(j, n, lam)
        assert dpi_lambda(pd.n_minus(j), params) == nminus_closed_form(j, n)


def test_dpi_lambda_star_closed_form():
    # the dual twist is 2rho - lambda = (n+1) - lambda; on constants this
    # gives (n+1-lambda) x_j, e.g. 2 x_1 at n = 3, lambda = 2
    n, lam = 3, Fraction(2)
    params = ScalarRepParams.sl(n, lam)
    pd = parabolic(n)
    for j in range(1, n + 1):
        assert dpi_lambda_star(pd.n_plus(j), params) == nplus_closed_form(
            j, n, Fraction(n + 1) - lam
        )
    op = dpi_lambda_star(pd.n_plus(1), params)
    assert op.apply(Polynomial.one(n)) == Polynomial.variable(n, 0).scale(2)


def test_dpi_lambda_star_lowering():
    params = ScalarRepParams.sl(3, Fraction(1, 3))
    pd = parabolic(3)
    assert dpi_lambda_star(pd.n_minus(2), params) == nminus_closed_form(2, 3)


def test_dpi_hat_lowering_is_multiplication():
    params = ScalarRepParams.sl(3, Fraction(5, 2))
    pd = parabolic(3)
    for j in range(1, 4):
        expected = WeylElement.from_polynomial(Polynomial.variable(3, j - 1, "zeta"))
        assert dpi_hat(pd.n_minus(j), params) == expected


@pytest.mark.parametrize("n,lam", [(2, Fraction(0)), (3, Fraction(-2)), (3, Fraction(1, 3))])
def test_raised_action_euler_identity(n, lam):
    # -zeta_j o dpi_hat(N_j^+) equals theta_j (lambda - 1 + E) exactly
    params = ScalarRepParams.sl(n, lam)
    pd = parabolic(n)
    E = WeylElement.euler(n, "zeta")
    shift = WeylElement.identity(n, "zeta").scale(lam - 1)
    for j in range(1, n + 1):
        zj = WeylElement.from_polynomial(Polynomial.variable(n, j - 1, "zeta"))
        thetaj = zj.compose(WeylElement.partial(n, j - 1, "zeta"))
        assert zj.compose(dpi_hat(pd.n_plus(j), params)).scale(-1) == thetaj.compose(E + shift)


def test_raised_action_kills_missing_variable():
    params = ScalarRepParams.sl(2, Fraction(4, 7))
    pd = parabolic(2)
    op = dpi_hat(pd.n_plus(1), params)
    p = Polynomial.monomial(2, (0, 5), 1, "zeta")
    assert op.apply(p).is_zero()


@pytest.mark.parametrize("flavor", ["sl", "gl"])
@pytest.mark.parametrize("n", [2, 3])
def test_lie_homomorphism_property(flavor, n):
    if flavor == "sl":
        params = ScalarRepParams.sl(n, Fraction(1, 3))
    else:
        params = ScalarRepParams.gl(n, Fraction(1, 3), Fraction(2, 5))
    pd = parabolic(n, flavor)
    basis = pd.g_basis()
    for builder in (dpi_lambda, dpi_lambda_star):
        for X, Y in itertools.combinations(basis, 2):
            lhs = builder(X, params).compose(builder(Y, params)) - builder(
                Y, params
            ).compose(builder(X, params))
            assert lhs == builder(bracket(X, Y), params)


def test_dpi_hat_is_fourier_of_dual():
    params = ScalarRepParams.sl(3, Fraction(-1, 2))
    pd = parabolic(3)
    for X in pd.g_basis():
        assert dpi_hat(X, params) == dpi_lambda_star(X, params).fourier()


def test_levi_preserves_degree():
    params = ScalarRepParams.sl(3, Fraction(7, 3))
    pd = parabolic(3)
    for Z in pd.l_basis():
        op = dpi_lambda(Z, params)
        for mono in monomials_up_to(3, 3):
            img = op.apply(Polynomial.monomial(3, mono, 1))
            assert img.is_zero() or img.degree() == sum(mono)


def test_dpi_target_scalar_fiber_reduction():
    # ell = 0 reduces to the scalar action in n-1 variables with weight nu
    n, nu = 3, Fraction(3, 7)
    tgt = TargetRepParams.sl(n, nu, ell=0)
    small = ScalarRepParams.sl(n - 1, nu)
    pd = parabolic(n)
    pd_small = parabolic(n - 1)
    pairs = [
        (pd.n_plus(1), pd_small.n_plus(1)),
        (pd.n_minus(1), pd_small.n_minus(1)),
        (pd.h0_tilde_prime, pd_small.h0_tilde),
    ]
    zero = (0,) * (n - 1)
    for big, smallX in pairs:
        got = dpi_target(big, tgt).entry(zero, zero)
        assert got == dpi_lambda(smallX, small)


def test_dpi_target_vector_fiber_hand_case():
    # E23 acts on Pol^1-valued sections: rotation field plus ytilde rotation
    n = 3
    tgt = TargetRepParams.sl(n, Fraction(3, 2), ell=1)
    pd = parabolic(n)
    op = dpi_target(pd.unit(2, 3), tgt)
    v = VectorValuedPolynomial(2, {(1, 0): Polynomial.one(2)})
    out = op.apply(v)
    assert out == VectorValuedPolynomial(2, {(0, 1): Polynomial.constant(2, -1)})


def test_dpi_target_homomorphism_sampled():
    n = 3
    tgt = TargetRepParams.sl(n, Fraction(3, 2), ell=1)
    pd = parabolic(n)
    basis = pd.g_basis(primed=True)
    vs = [
        VectorValuedPolynomial(2, {(1, 0): Polynomial.monomial(2, m, 1)})
        for m in monomials_up_to(2, 2)
    ]
    for X, Y in itertools.islice(itertools.combinations(basis, 2), 12):
        AX, AY = dpi_target(X, tgt), dpi_target(Y, tgt)
        AB = dpi_target(bracket(X, Y), tgt)
        for v in vs:
            lhs = AX.apply(AY.apply(v)) - AY.apply(AX.apply(v))
            assert (lhs - AB.apply(v)).is_zero()


def test_gl_second_character_weights():
    # J0' acts on zeta_n trivially and on zeta_j (j < n) with weight 1/(n-1)
    n = 3
    params = ScalarRepParams.gl(n, Fraction(0), Fraction(0))
    pd = parabolic(n, "gl")
    op = dpi_hat(pd.j0_prime, params)
    zn = Polynomial.monomial(n, (0, 0, 4), 1, "zeta")
    assert op.apply(zn).is_zero()
    z1 = Polynomial.monomial(n, (2, 0, 0), 1, "zeta")
    assert op.apply(z1) == z1.scale(Fraction(2, n - 1))


def test_dpi_target_lowering_is_derivation():
    # N_j^- for j < n acts as -d/dx_j tensor id on the vector-valued target
    n = 3
    tgt = TargetRepParams.sl(n, Fraction(3, 2), ell=1)
    pd = parabolic(n)
    for j in (1, 2):
        op = dpi_target(pd.n_minus(j), tgt)
        for lbl in ((1, 0), (0, 1)):
            assert op.entry(lbl, lbl) == WeylElement.partial(2, j - 1).scale(-1)
            other = (0, 1) if lbl == (1, 0) else (1, 0)
            assert op.entry(other, lbl).is_zero()


def test_dpi_target_diagonal_fiber_weights():
    # the grading element of l' acts diagonally: nu plus the Euler field,
    # with no off-diagonal fiber mixing
    n, nu = 3, Fraction(3, 2)
    tgt = TargetRepParams.sl(n, nu, ell=1)
    pd = parabolic(n)
    op = dpi_target(pd.h0_tilde_prime, tgt)
    for lbl in ((1, 0), (0, 1)):
        got = op.entry(lbl, lbl)
        expected = WeylElement.identity(2).scale(nu) + WeylElement.euler(2).scale(
            Fraction(3, 2)
        )
        assert got == expected
        other = (0, 1) if lbl == (1, 0) else (1, 0)
        assert op.entry(other, lbl).is_zero()


def test_domain_guards():
    import pytest

    params = ScalarRepParams.sl(2, Fraction(1))
    pd = parabolic(2)
    not_traceless = pd.unit(1, 1)
    with pytest.raises(ValueError):
        dpi_lambda(not_traceless, params)
    tgt = TargetRepParams.sl(3, Fraction(1), ell=0)
    with pytest.raises(ValueError):
        dpi_target(parabolic(3).n_plus(3), tgt)  # N_n^+ is not in g'
