"""Concrete differential operators between section spaces.

The symmetry breaking operator D_(m,l) acts on functions of x_1..x_n and
produces Pol^l-valued functions of x_1..x_{n-1}:

    D_(m,l) = Rest_{x_n=0} o d^m/dx_n^m  sum_{l in Xi'_l} d^l/dx^l  (x) ytilde_l.

The 1/l! normalization lives inside the basis labels ytilde_l, so the
component at label l is literally the mixed derivative.  Operators are kept
as `Rest o (Weyl operator)` normal forms: the coefficients of a
normal-ordered operator sit left of all derivatives, so restricting them to
x_n = 0 is exact and composition identities can be compared symbol by
symbol.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    Polynomial,
    monomial_basis,
    monomials_up_to,
    rank_of_vectors,
    same_span,
)
from .liealg import parabolic
from .rep import (
    ScalarRepParams,
    TargetRepParams,
    VectorValuedPolynomial,
    dpi_lambda,
    dpi_target,
)
from .weyl import WeylElement, symb_inverse


@dataclass(frozen=True)
class SBO:
    """Rest_{x_n=0} after a tuple of constant-coefficient operators on R^n."""

    n: int
    components: tuple  # ((label, WeylElement), ...), labels in Xi'_l
    m: int = None
    ell: int = None

    def component_map(self):
        return dict(self.components)

    def apply(self, f: Polynomial) -> VectorValuedPolynomial:
        if f.arity != self.n:
            raise ValueError("arity mismatch")
        comps = {}
        for lbl, op in self.components:
            g = op.apply(f).set_var_zero(self.n - 1).drop_last_var()
            if not g.is_zero():
                comps[lbl] = g
        return VectorValuedPolynomial(self.n - 1, comps, f.var)


def build_sbo(m: int, ell: int, n: int) -> SBO:
    """D_(m,l): component at ytilde_l is d^m/dx_n^m d^l/dx^l."""
    comps = []
    for lbl in monomial_basis(n - 1, ell):
        alpha = lbl + (m,)
        comps.append((lbl, WeylElement.derivative_monomial(n, alpha)))
    return SBO(n, tuple(comps), m, ell)


def sbo_from_solution(psi: VectorValuedPolynomial) -> SBO:
    """Rest o symb^{-1} applied to a Fourier-picture solution."""
    n = psi.arity
    comps = []
    for lbl, poly in psi.sorted_items():
        comps.append((lbl, symb_inverse(poly)))
    return SBO(n, tuple(comps))


def apply_sbo(D: SBO, f: Polynomial) -> VectorValuedPolynomial:
    return D.apply(f)


@dataclass(frozen=True)
class IDOOp:
    """The order-k intertwining operator on R^n (no restriction)."""

    n: int
    k: int

    def components(self):
        return [(lbl, WeylElement.derivative_monomial(self.n, lbl)) for lbl in monomial_basis(self.n, self.k)]

    def apply(self, f) -> VectorValuedPolynomial:
        if isinstance(f, Polynomial):
            comps = {}
            for lbl, op in self.components():
                g = op.apply(f)
                if not g.is_zero():
                    comps[lbl] = g
            return VectorValuedPolynomial(self.n, comps, f.var)
        # Pol^l-valued input: act componentwise and multiply labels
        comps = {}
        for lbl, op in self.components():
            for in_lbl, p in f.components.items():
                g = op.apply(p)
                if g.is_zero():
                    continue
                out = tuple(a + b for a, b in zip(lbl, in_lbl))
                cur = comps.get(out)
                comps[out] = g if cur is None else cur + g
        return VectorValuedPolynomial(self.n, comps, f.var)


def build_ido(k: int, n: int) -> IDOOp:
    return IDOOp(n, k)


def apply_ido(D: IDOOp, f) -> VectorValuedPolynomial:
    return D.apply(f)


@dataclass(frozen=True)
class ProjOp:
    """Component selection (m, l) for l in Xi'_l, then restriction to x_n = 0."""

    n: int
    m: int
    ell: int

    def apply(self, v: VectorValuedPolynomial) -> VectorValuedPolynomial:
        comps = {}
        for lbl in monomial_basis(self.n - 1, self.ell):
            p = v.components.get(lbl + (self.m,))
            if p is None:
                continue
            q = p.set_var_zero(self.n - 1).drop_last_var()
            if not q.is_zero():
                comps[lbl] = q
        return VectorValuedPolynomial(self.n - 1, comps, v.var)


def build_proj(m: int, ell: int, n: int) -> ProjOp:
    return ProjOp(n, m, ell)


# -- equivariance ---------------------------------------------------------------


def _compose_sbo_after(D: SBO, op: WeylElement) -> dict:
    """Normal forms of Rest o (D_l o op), one restricted Weyl op per label."""
    return {lbl: comp.compose(op).restrict_last_var() for lbl, comp in D.components}


def _compose_target_before(T, D: SBO) -> dict:
    """Normal forms of Rest o ((T o D)_l); T acts on n-1 variables."""
    n = D.n
    comp_map = D.component_map()
    out = {}
    for out_lbl in T.out_labels:
        acc = WeylElement.zero(n)
        for in_lbl in T.in_labels:
            dcomp = comp_map.get(in_lbl)
            if dcomp is None:
                continue
            t_entry = T.entry(out_lbl, in_lbl)
            if t_entry.is_zero():
                continue
            acc = acc + t_entry.pad_vars(n).compose(dcomp)
        out[out_lbl] = acc.restrict_last_var()
    return {lbl: w for lbl, w in out.items() if not w.is_zero()}


def _restricted_witness(diff: WeylElement):
    """Monomial whose image under Rest o diff is nonzero, or None."""
    if diff.is_zero():
        return None
    n = diff.arity
    cap = diff.order() + max(p.degree() for p in diff.terms.values()) + 2
    for mono in monomials_up_to(n, cap):
        f = Polynomial.monomial(n, mono, 1)
        if not diff.apply(f).set_var_zero(n - 1).is_zero():
            return mono
    return None


def check_equivariance(
    D: SBO,
    source: ScalarRepParams,
    target: TargetRepParams,
    degree_cap: int = 6,
) -> dict:
    """Exact intertwining test: D o dpi(X) = dpi_target(X) o D for X in g'.

    Compared as operator normal forms, which covers all polynomial degrees;
    any mismatch is reported with a violating (X, monomial) witness.
    """
    if D.ell is not None and target.ell != D.ell:
        raise ValueError("target fiber degree must match the operator labels")
    pd = parabolic(source.n, source.flavor)
    violations = []
    for X in pd.g_basis(primed=True):
        lhs = _compose_sbo_after(D, dpi_lambda(X, source))
        rhs = _compose_target_before(dpi_target(X, target), D)
        labels = set(lhs) | set(rhs)
        for lbl in sorted(labels):
            a = lhs.get(lbl, WeylElement.zero(D.n))
            b = rhs.get(lbl, WeylElement.zero(D.n))
            diff = a - b
            if not diff.is_zero():
                witness = _restricted_witness(diff)
                violations.append(
                    {
                        "X": _describe_element(X),
                        "component": lbl,
                        "monomial": witness,
                    }
                )
                break
    return {
        "identity": "equivariance",
        "n": source.n,
        "m": D.m,
        "l": D.ell,
        "degree_cap": degree_cap,
        "status": "pass" if not violations else "fail",
        "violations": violations,
    }


def _describe_element(X) -> str:
    bits = []
    for i, row in enumerate(X.entries):
        for j, v in enumerate(row):
            if v:
                bits.append(f"{v}*E{i + 1}{j + 1}" if v != 1 else f"E{i + 1}{j + 1}")
    return " + ".join(bits) if bits else "0"


# -- factorization ----------------------------------------------------------------


def verify_factorization_sbo(m: int, ell: int, n: int, degree_cap: int = 6) -> dict:
    """D_(m,l) = D'_l o D_(m,0) = Proj_(m,l) o D_{m+l}, exactly.

    Both identities are checked as normal forms and then re-checked by
    applying all three routes to every monomial of degree <= degree_cap.
    """
    D_ml = build_sbo(m, ell, n)
    D_m0 = build_sbo(m, 0, n)
    direct = {lbl: comp for lbl, comp in D_ml.components}

    # route 1: D'_l after D_(m,0); lift the (n-1)-variable operator
    route1 = {}
    dn_m = WeylElement.derivative_monomial(n, (0,) * (n - 1) + (m,))
    for lbl in monomial_basis(n - 1, ell):
        dprime = WeylElement.derivative_monomial(n - 1, lbl)
        route1[lbl] = dprime.pad_vars(n).compose(dn_m)

    # route 2: projection of D_{m+l}; component (l, m) of the big operator
    route2 = {
        lbl: WeylElement.derivative_monomial(n, lbl + (m,))
        for lbl in monomial_basis(n - 1, ell)
    }

    ok_ops = direct == route1 == route2

    mismatches = []
    checked = 0
    ido_big = build_ido(m + ell, n)
    ido_prime = build_ido(ell, n - 1)
    proj = build_proj(m, ell, n)
    zero_lbl = (0,) * (n - 1)
    for mono in monomials_up_to(n, degree_cap):
        f = Polynomial.monomial(n, mono, 1)
        a = D_ml.apply(f)
        b = ido_prime.apply(D_m0.apply(f).components.get(zero_lbl, Polynomial.zero(n - 1)))
        c = proj.apply(ido_big.apply(f))
        checked += 1
        if not ((a - b).is_zero() and (a - c).is_zero()):
            mismatches.append(mono)
    status = "pass" if ok_ops and not mismatches else "fail"
    return {
        "identity": "factorization",
        "n": n,
        "m": m,
        "l": ell,
        "degree_cap": degree_cap,
        "monomials_checked": checked,
        "status": status,
        "counterexample": mismatches[:1] or None,
    }


# -- images ------------------------------------------------------------------------


def _poly_coords(polys, arity, degree_cap):
    monos = monomials_up_to(arity, degree_cap)
    index = {m: i for i, m in enumerate(monos)}
    out = []
    for p in polys:
        vec = [Fraction(0)] * len(monos)
        for mo, c in p.terms.items():
            vec[index[mo]] = c
        out.append(vec)
    return out


def fg_submodule(k: int, n: int, flavor="sl") -> dict:
    """Check that polynomials of degree < k form a dpi_{1-k}-stable subspace."""
    params = (
        ScalarRepParams.sl(n, Fraction(1 - k))
        if flavor == "sl"
        else ScalarRepParams.gl(n, Fraction(1 - k), Fraction(0))
    )
    pd = parabolic(n, flavor)
    failures = []
    for X in pd.g_basis():
        op = dpi_lambda(X, params)
        for mono in monomials_up_to(n, k - 1):
            img = op.apply(Polynomial.monomial(n, mono, 1))
            if img.degree() >= k:
                failures.append((_describe_element(X), mono))
    return {
        "identity": "fg-stability",
        "n": n,
        "k": k,
        "status": "pass" if not failures else "fail",
        "counterexample": failures[:1] or None,
    }


def image_computations(m: int, ell: int, n: int) -> dict:
    """Annihilation and image statements for the restricted operators.

    (a) D_(m,l) kills every polynomial of degree < m + l;
    (b) D_(m,0) maps {deg < m+l} exactly onto {deg < l} on R^{n-1};
    (c) the witness D_(m,0) x_n^m = m!;
    (d) graded surjectivity: D_(m,0)({deg <= d}) = {deg <= d-m}.
    """
    k = m + ell
    zero_lbl = (0,) * (n - 1)
    D_ml = build_sbo(m, ell, n)
    D_m0 = build_sbo(m, 0, n)
    kill_ok = all(
        D_ml.apply(Polynomial.monomial(n, mono, 1)).is_zero()
        for mono in monomials_up_to(n, k - 1)
    )

    images = [
        D_m0.apply(Polynomial.monomial(n, mono, 1)).components.get(
            zero_lbl, Polynomial.zero(n - 1)
        )
        for mono in monomials_up_to(n, k - 1)
    ]
    if ell > 0:
        targets = [
            Polynomial.monomial(n - 1, mono, 1) for mono in monomials_up_to(n - 1, ell - 1)
        ]
        image_ok = same_span(
            _poly_coords([p for p in images if not p.is_zero()], n - 1, ell - 1),
            _poly_coords(targets, n - 1, ell - 1),
        )
    else:
        image_ok = all(p.is_zero() for p in images)

    xnm = [0] * n
    xnm[-1] = m
    wit = D_m0.apply(Polynomial.monomial(n, tuple(xnm), 1)).components.get(
        zero_lbl, Polynomial.zero(n - 1)
    )
    witness_ok = wit == Polynomial.constant(n - 1, math.factorial(m))

    surj_ok = True
    for d in range(m, m + 3):
        images_d = [
            D_m0.apply(Polynomial.monomial(n, mono, 1)).components.get(
                zero_lbl, Polynomial.zero(n - 1)
            )
            for mono in monomials_up_to(n, d)
        ]
        tgt_d = [Polynomial.monomial(n - 1, mono, 1) for mono in monomials_up_to(n - 1, d - m)]
        if not same_span(
            _poly_coords([p for p in images_d if not p.is_zero()], n - 1, d),
            _poly_coords(tgt_d, n - 1, d),
        ):
            surj_ok = False
    status = "pass" if (kill_ok and image_ok and witness_ok and surj_ok) else "fail"
    return {
        "identity": "images",
        "n": n,
        "m": m,
        "l": ell,
        "kills_finite_submodule": kill_ok,
        "image_is_lower_degrees": image_ok,
        "witness_m_factorial": witness_ok,
        "graded_surjectivity": surj_ok,
        "status": status,
    }
