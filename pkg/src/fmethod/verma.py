"""Fourier-picture generalized Verma modules and their homomorphisms.

A Verma module induced from the dual of the (varpi, nu) bundle is modelled
as Pol(zeta_1..zeta_N) tensor fiber, N = n or n-1, with g acting through
the Fourier transform of the dual-twisted induced representation.  Under
this model N_j^- acts as multiplication by zeta_j, so the classical
generator picture and the polynomial picture coincide monomial by monomial
and the highest-weight parameter s corresponds to the inducing weight -s.

Homomorphisms are stored by the images of the fiber generators and extended
by multiplication with the source polynomial ring; intertwining is then an
exact, checkable identity grade by grade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Polynomial, monomial_basis
from .liealg import GL, SL, parabolic
from .params import sign_shift, sign_str
from .rep import (
    ScalarFiber,
    SymFiber,
    VectorValuedPolynomial,
    induced_operator,
)


@dataclass(frozen=True)
class VermaModule:
    """Pol(zeta) tensor S^k fiber with the Fourier-transformed dual action.

    `nu_ind` is the inducing weight of the underlying bundle, so the
    highest weight of the module is -nu_ind; `signs` are the M-parities.
    """

    n: int
    flavor: str = SL
    primed: bool = False
    fiber_degree: int = 0
    nu_ind: tuple = (Fraction(0),)
    signs: tuple = (0,)

    @classmethod
    def scalar(cls, n, s, flavor=SL, sign=(0,), s2=None):
        nu = (Fraction(-s),) if flavor == SL else (Fraction(-s), Fraction(-s2))
        return cls(n, flavor, False, 0, nu, tuple(sign))

    @classmethod
    def scalar_primed(cls, n, r, flavor=SL, sign=(0,), r2=None):
        nu = (Fraction(-r),) if flavor == SL else (Fraction(-r), Fraction(-r2))
        return cls(n, flavor, True, 0, nu, tuple(sign))

    @classmethod
    def fiber(cls, n, k, u, flavor=SL, sign=(0,), u2=None):
        nu = (Fraction(-u),) if flavor == SL else (Fraction(-u), Fraction(-u2))
        return cls(n, flavor, False, k, nu, tuple(sign))

    @classmethod
    def fiber_primed(cls, n, k, u, flavor=SL, sign=(0,), u2=None):
        nu = (Fraction(-u),) if flavor == SL else (Fraction(-u), Fraction(-u2))
        return cls(n, flavor, True, k, nu, tuple(sign))

    @property
    def num_vars(self):
        return self.n - 1 if self.primed else self.n

    @property
    def pd(self):
        return parabolic(self.n, self.flavor)

    def dual_weights(self):
        rho2 = self.pd.two_rho_prime() if self.primed else self.pd.two_rho()
        return tuple(r - x for r, x in zip(rho2, self.nu_ind))

    def fiber_labels(self):
        if self.fiber_degree == 0:
            return [()]
        return monomial_basis(self.num_vars, self.fiber_degree)

    def action(self, X):
        return _verma_action(self, X)

    def basis(self, grade):
        """(zeta-monomial, fiber label) pairs of one grade."""
        return [
            (mono, lbl)
            for mono in monomial_basis(self.num_vars, grade)
            for lbl in self.fiber_labels()
        ]

    def grade_dim(self, grade):
        return math.comb(grade + self.num_vars - 1, self.num_vars - 1) * len(
            self.fiber_labels()
        )

    def unit(self, mono, lbl) -> VectorValuedPolynomial:
        return VectorValuedPolynomial(
            self.num_vars,
            {tuple(lbl): Polynomial.monomial(self.num_vars, mono, 1, "zeta")},
            "zeta",
        )

    def gamma_action(self, gamma, v: VectorValuedPolynomial) -> VectorValuedPolynomial:
        """Group action of a component-group generator on the model."""
        g0 = gamma.entries[0][0]
        ad = [gamma.entries[j][j] * g0 for j in range(1, self.num_vars + 1)]
        blk = [gamma.entries[j][j] for j in range(1, self.num_vars + 1)]
        det_block = Fraction(1)
        for b in blk:
            det_block *= b
        if self.flavor == SL:
            char = det_block if self.signs[0] % 2 else Fraction(1)
        else:
            char = g0 if self.signs[0] % 2 else Fraction(1)
            if self.signs[1] % 2:
                char *= det_block
        comps = {}
        for lbl, p in v.components.items():
            fsign = Fraction(1)
            for j, e in enumerate(lbl):
                fsign *= blk[j] ** e
            terms = {}
            for mono, c in p.terms.items():
                s = Fraction(1)
                for j, e in enumerate(mono):
                    s *= ad[j] ** e
                terms[mono] = c * s * fsign * char
            q = Polynomial(self.num_vars, terms, "zeta")
            if not q.is_zero():
                comps[lbl] = q
        return VectorValuedPolynomial(self.num_vars, comps, "zeta")


@lru_cache(maxsize=None)
def _verma_action(module: VermaModule, X):
    pd = module.pd
    dw = module.dual_weights()
    if module.fiber_degree == 0:
        fiber = ScalarFiber(dw)
    else:
        fiber = SymFiber(module.fiber_degree, module.num_vars, dw)
    return induced_operator(X, pd, module.num_vars, fiber).fourier()


@dataclass(frozen=True)
class VermaHom:
    """Map determined by fiber-generator images, extended U(n_-)-linearly."""

    source: VermaModule
    target: VermaModule
    images: tuple  # ((source label, VectorValuedPolynomial in target model), ...)

    def image_map(self):
        return dict(self.images)

    def apply(self, v: VectorValuedPolynomial) -> VectorValuedPolynomial:
        imap = self.image_map()
        out = VectorValuedPolynomial.zero(self.target.num_vars, "zeta")
        for lbl, poly in v.components.items():
            img = imap[lbl]
            q = poly.pad_vars(self.target.num_vars)
            out = out + img.mul_poly(q)
        return out


def build_phi(m: int, ell: int, n: int, flavor=SL, alpha=0, lam2=Fraction(0)) -> VermaHom:
    """Phi_(m,ell): fiber generator e_l goes to zeta_n^m zeta^l."""
    s = (m + ell) - 1
    mu_p = 1 + Fraction(ell, n - 1)
    if flavor == SL:
        src = VermaModule.fiber_primed(
            n, ell, -mu_p, sign=(sign_shift(alpha, m + ell),)
        )
        tgt = VermaModule.scalar(n, s, sign=(alpha,))
    else:
        src = VermaModule.fiber_primed(
            n, ell, -mu_p, GL,
            sign=(sign_shift(alpha, m + ell), 0),
            u2=-(lam2 - Fraction(ell, n - 1)),
        )
        tgt = VermaModule.scalar(n, s, GL, sign=(alpha, 0), s2=-lam2)
    images = []
    for lbl in src.fiber_labels():
        mono = (lbl if lbl else (0,) * (n - 1)) + (m,)
        images.append(
            (lbl, VectorValuedPolynomial(n, {(): Polynomial.monomial(n, mono, 1, "zeta")}, "zeta"))
        )
    return VermaHom(src, tgt, tuple(images))


def build_phi_k(k: int, n: int, flavor=SL, alpha=0, lam2=Fraction(0), primed=False) -> VermaHom:
    """phi_k (or phi'_k on the primed pair): e_k goes to zeta^k."""
    nv = n - 1 if primed else n
    rank = n - 1 if primed else n
    s = k - 1
    mu = 1 + Fraction(k, rank)
    beta = sign_shift(alpha, k)
    if flavor == SL:
        if primed:
            src = VermaModule.fiber_primed(n, k, -mu, sign=(beta,))
            tgt = VermaModule.scalar_primed(n, s, sign=(alpha,))
        else:
            src = VermaModule.fiber(n, k, -mu, sign=(beta,))
            tgt = VermaModule.scalar(n, s, sign=(alpha,))
    else:
        u2 = -(lam2 - Fraction(k, rank))
        if primed:
            src = VermaModule.fiber_primed(n, k, -mu, GL, sign=(beta, 0), u2=u2)
            tgt = VermaModule.scalar_primed(n, s, GL, sign=(alpha, 0), r2=-lam2)
        else:
            src = VermaModule.fiber(n, k, -mu, GL, sign=(beta, 0), u2=u2)
            tgt = VermaModule.scalar(n, s, GL, sign=(alpha, 0), s2=-lam2)
    images = []
    for lbl in src.fiber_labels():
        mono = lbl if lbl else (0,) * nv
        images.append(
            (lbl, VectorValuedPolynomial(nv, {(): Polynomial.monomial(nv, mono, 1, "zeta")}, "zeta"))
        )
    return VermaHom(src, tgt, tuple(images))


def build_emb(m: int, ell: int, n: int, flavor=SL, alpha=0, lam2=Fraction(0)) -> VermaHom:
    """Emb~_(m,ell): e_l goes to the grade-0 fiber vector e_(m,l)."""
    mu_p = 1 + Fraction(ell, n - 1)
    mu = 1 + Fraction(m + ell, n)
    beta = sign_shift(alpha, m + ell)
    if flavor == SL:
        src = VermaModule.fiber_primed(n, ell, -mu_p, sign=(beta,))
        tgt = VermaModule.fiber(n, m + ell, -mu, sign=(beta,))
    else:
        src = VermaModule.fiber_primed(
            n, ell, -mu_p, GL, sign=(beta, 0), u2=-(lam2 - Fraction(ell, n - 1))
        )
        tgt = VermaModule.fiber(
            n, m + ell, -mu, GL, sign=(beta, 0), u2=-(lam2 - Fraction(m + ell, n))
        )
    images = []
    for lbl in src.fiber_labels():
        big = (lbl if lbl else (0,) * (n - 1)) + (m,)
        out_lbl = big if tgt.fiber_degree > 0 else ()
        images.append(
            (lbl, VectorValuedPolynomial(n, {out_lbl: Polynomial.one(n, "zeta")}, "zeta"))
        )
    return VermaHom(src, tgt, tuple(images))


def hom_from_solution(psi: VectorValuedPolynomial, src: VermaModule, tgt: VermaModule) -> VermaHom:
    """F_c^{-1} of a Fourier-picture solution: images are its components."""
    images = []
    if src.fiber_degree == 0:
        # scalar fiber: accept whichever zero label the solver used
        vals = list(psi.components.values())
        p = vals[0] if vals else Polynomial.zero(tgt.num_vars, "zeta")
        images.append(((), VectorValuedPolynomial(tgt.num_vars, {(): p}, "zeta")))
    else:
        for lbl in src.fiber_labels():
            p = psi.components.get(lbl, Polynomial.zero(tgt.num_vars, "zeta"))
            images.append((lbl, VectorValuedPolynomial(tgt.num_vars, {(): p}, "zeta")))
    return VermaHom(src, tgt, tuple(images))


def check_hom_equivariance(h: VermaHom, degree_cap: int = 3) -> dict:
    """h intertwines the actions of g' (g if the source is unprimed), exactly.

    The infinitesimal check runs over the standard basis on all source
    elements of grade <= degree_cap; the disconnected part of P' is checked
    as the gamma-sign condition on the fiber generators.
    """
    pd = h.source.pd
    primed = h.source.primed
    basis = pd.g_basis(primed=primed)
    violations = []
    for X in basis:
        srcop = h.source.action(X)
        tgtop = h.target.action(X)
        for g in range(degree_cap + 1):
            for mono, lbl in h.source.basis(g):
                v = h.source.unit(mono, lbl)
                lhs = h.apply(srcop.apply(v))
                rhs = tgtop.apply(h.apply(v))
                if not (lhs - rhs).is_zero():
                    violations.append(
                        {"X": _describe(X), "grade": g, "vector": (mono, lbl)}
                    )
                    break
            if violations and violations[-1]["X"] == _describe(X):
                break
    sign_violations = []
    for gamma in pd.gamma_elements(primed=primed):
        for lbl in h.source.fiber_labels():
            v = h.source.unit((0,) * h.source.num_vars, lbl)
            lhs = h.apply(h.source.gamma_action(gamma, v))
            rhs = h.target.gamma_action(gamma, h.apply(v))
            if not (lhs - rhs).is_zero():
                sign_violations.append({"gamma": _describe(gamma), "label": lbl})
    status = "pass" if not violations and not sign_violations else "fail"
    return {
        "identity": "hom-equivariance",
        "degree_cap": degree_cap,
        "status": status,
        "violations": violations,
        "sign_violations": sign_violations,
    }


def _describe(X) -> str:
    bits = []
    for i, row in enumerate(X.entries):
        for j, v in enumerate(row):
            if v:
                bits.append(f"{v}*E{i + 1}{j + 1}" if v != 1 else f"E{i + 1}{j + 1}")
    return " + ".join(bits) if bits else "0"


def verify_factorization_verma(
    m: int, ell: int, n: int, degree_cap: int = 3, flavor=SL, alpha=0, lam2=Fraction(0)
) -> dict:
    """Phi_(m,l) = Phi_(m,0) o phi'_l = phi_{m+l} o Emb~_(m,l), three routes."""
    phi_ml = build_phi(m, ell, n, flavor, alpha, lam2)
    phi_m0 = build_phi(m, 0, n, flavor, sign_shift(alpha, 0), lam2)
    phi_prime = build_phi_k(ell, n, flavor, sign_shift(alpha, m), lam2, primed=True)
    phi_big = build_phi_k(m + ell, n, flavor, alpha, lam2)
    emb = build_emb(m, ell, n, flavor, alpha, lam2)
    mismatches = []
    checked = 0
    for g in range(degree_cap + 1):
        for mono, lbl in phi_ml.source.basis(g):
            v = phi_ml.source.unit(mono, lbl)
            direct = phi_ml.apply(v)
            route1 = phi_m0.apply(phi_prime.apply(v))
            route2 = phi_big.apply(emb.apply(v))
            checked += 1
            if not ((direct - route1).is_zero() and (direct - route2).is_zero()):
                mismatches.append((g, mono, lbl))
    return {
        "identity": "verma-factorization",
        "n": n,
        "m": m,
        "l": ell,
        "degree_cap": degree_cap,
        "vectors_checked": checked,
        "status": "pass" if not mismatches else "fail",
        "counterexample": mismatches[:1] or None,
    }


def classify_homs(
    n,
    connected=False,
    m_max=3,
    l_max=3,
    s_samples=(Fraction(1, 3), Fraction(5), Fraction(-7, 2)),
) -> list:
    """Classification of (g',P')- or g'-homomorphisms via the duality mirror."""
    from .engine import solve_fsystem, weight_degree_cap
    from .params import predicted_dim_sl, predicted_dim_sl_connected, SLQuadruple
    from .rep import ScalarRepParams, TargetRepParams

    rows = []
    for m in range(m_max + 1):
        for ell in range(l_max + 1):
            svals = [Fraction((m + ell) - 1)]
            for s in s_samples:
                s = Fraction(s)
                if s not in svals:
                    svals.append(s)
            for s in svals:
                r = s - m - Fraction(n, n - 1) * ell
                lam, nu = -s, -r
                sign_pairs = [(0, sign_shift(0, m + ell))]
                if not connected:
                    sign_pairs.append((0, sign_shift(1, m + ell)))
                for alpha, beta in sign_pairs:
                    q = SLQuadruple(alpha, beta, ell, lam, nu).canonical(n)
                    if n == 2:
                        target = TargetRepParams.sl(n, nu, ell=0, beta=q.beta)
                    else:
                        target = TargetRepParams.sl(n, nu, ell=ell, beta=beta)
                    source = ScalarRepParams.sl(n, lam, alpha)
                    sol = solve_fsystem(
                        source, target, weight_degree_cap(nu - lam), connected=connected
                    )
                    if connected:
                        predicted = predicted_dim_sl_connected(q.ell, lam, nu, n)
                    else:
                        predicted = predicted_dim_sl(q, n)
                    rows.append(
                        {
                            "flavor": "gprime" if connected else "gp",
                            "n": n,
                            "alpha": sign_str(alpha),
                            "beta": sign_str(beta),
                            "l": ell,
                            "s": str(s),
                            "r": str(r),
                            "predicted_dim": predicted,
                            "computed_dim": sol.dim,
                            "basis_symbols": "; ".join(str(v) for v in sol.basis),
                            "ok": sol.dim == predicted,
                        }
                    )
    rows.sort(key=lambda row: (row["l"], row["s"], row["r"], row["alpha"], row["beta"]))
    return rows
