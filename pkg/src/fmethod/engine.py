"""The F-method engine: equivariant spaces, the F-system, classification scans.

The solution space Sol(n_+; V, W) is computed literally: take all pairs
(zeta-monomial, fiber label), impose the l'-equivariance and the component
group sign condition by exact linear algebra, then intersect with the joint
kernel of dpi_hat(N_j^+) tensor id over the primed (or, in full-nilradical
mode, the whole) nilpotent radical.

Diagonal constraints (the A'-weights, the Cartan of m', the gamma signs)
act diagonally on monomial pairs and are applied as filters; what remains
goes through one RREF nullspace per homogeneous degree.  Output bases are
RREF-canonical in the graded-lex coordinate order, so every scan is
reproducible byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Matrix, Polynomial, monomial_basis, monomial_key, rank_of_vectors
from .liealg import GL, SL, parabolic
from .params import (
    GLTuple,
    SLQuadruple,
    in_lambda_gl,
    in_lambda_sl,
    predicted_dim_gl,
    predicted_dim_ido,
    predicted_dim_sl,
    sign_shift,
    sign_str,
)
from .rep import (
    ScalarRepParams,
    SymFiber,
    TargetRepParams,
    VectorValuedPolynomial,
    dpi_hat,
)


@dataclass
class EquivariantSpace:
    """Basis of Hom_{M'A'}(W^v, Pol(n_+) tensor V^v) in one homogeneous degree."""

    source: ScalarRepParams
    target: TargetRepParams
    degree: int
    unknowns: list
    basis_vectors: list  # coefficient vectors over `unknowns`
    connected: bool = False
    full_nilradical: bool = False

    @property
    def basis(self):
        return [_vector_to_vvp(v, self.unknowns, self.source.n) for v in self.basis_vectors]

    @property
    def dim(self):
        return len(self.basis_vectors)

    def witness_split(self):
        """(m, ell) = (zeta_n degree, primed degree) when unambiguous."""
        out = []
        for v in self.basis_vectors:
            monos = {self.unknowns[i][0] for i, c in enumerate(v) if c}
            kn = {mono[-1] for mono in monos}
            lp = {sum(mono[:-1]) for mono in monos}
            out.append((kn.pop(), lp.pop()) if len(kn) == 1 and len(lp) == 1 else None)
        return out


@dataclass
class SolutionSpace:
    """Joint kernel of the F-system inside the equivariant space."""

    source: ScalarRepParams
    target: TargetRepParams
    basis: list  # VectorValuedPolynomial, zeta variables
    degrees: list
    provenance: dict = field(default_factory=dict)

    @property
    def dim(self):
        return len(self.basis)


def _vector_to_vvp(vec, unknowns, arity) -> VectorValuedPolynomial:
    comps = {}
    for coeff, (mono, lbl) in zip(vec, unknowns):
        if coeff:
            comps.setdefault(lbl, {})[mono] = coeff
    return VectorValuedPolynomial(
        arity, {l: Polynomial(arity, t, "zeta") for l, t in comps.items()}, "zeta"
    )


def _unit_vector(n, i):
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _prod(items):
    out = Fraction(1)
    for x in items:
        out *= x
    return out


class _SolveContext:
    """Shared data for one (source, target, mode) solve."""

    def __init__(self, source, target, connected=False, full_nilradical=False):
        self.source = source
        self.target = target
        self.connected = connected
        self.full = full_nilradical
        self.n = source.n
        self.pd = parabolic(source.n, source.flavor)
        self.block = self.n if full_nilradical else self.n - 1
        self.fiber = SymFiber(
            target.ell, self.block, tuple(-x for x in target.nu)
        )
        self.labels = self.fiber.labels(self.pd)
        primed = not full_nilradical
        self.diag = [self.pd.h0_tilde if full_nilradical else self.pd.h0_tilde_prime]
        if source.flavor == GL:
            self.diag.append(self.pd.j0 if full_nilradical else self.pd.j0_prime)
        self.diag.extend(self.pd.m_cartan(primed=primed))
        self.offdiag = self.pd.m_offdiag(primed=primed)
        self.gamma_data = []
        if not connected:
            for g in self.pd.gamma_elements(primed=primed):
                self.gamma_data.append(self._gamma_datum(g))
        js = range(1, (self.n if full_nilradical else self.n - 1) + 1)
        self.fsys_ops = [dpi_hat(self.pd.n_plus(j), source) for j in js]
        self._diag_ops = [dpi_hat(Z, source) for Z in self.diag]
        self._diag_fiber_eigs = []
        for Z in self.diag:
            acts = self.fiber.act(Z, self.pd)
            if any(k[0] != k[1] for k in acts):
                raise ValueError("fiber action of a diagonal element is not diagonal")
            self._diag_fiber_eigs.append(
                {lbl: acts.get((lbl, lbl), Fraction(0)) for lbl in self.labels}
            )

    def _gamma_datum(self, gamma):
        pd = self.pd
        g0 = gamma.entries[0][0]
        ad = [gamma.entries[j][j] * g0 for j in range(1, pd.n + 1)]
        det_block = _prod(gamma.entries[j][j] for j in range(1, pd.n + 1))
        det_w = (
            det_block
            if self.full
            else _prod(gamma.entries[j][j] for j in range(1, pd.n))
        )
        v_side = self._char_sign(self.source.alpha, g0, det_block)
        w_side = self._char_sign(self.target.beta, g0, det_w)
        # the fiber transforms by the block entries themselves (no Ad twist)
        fiber_signs = {
            lbl: _prod(gamma.entries[j + 1][j + 1] ** lbl[j] for j in range(self.block))
            for lbl in self.labels
        }
        return ad, v_side, w_side, fiber_signs

    def _char_sign(self, parities, g0, det_block):
        if self.source.flavor == SL:
            return det_block if parities[0] % 2 else Fraction(1)
        s = g0 if parities[0] % 2 else Fraction(1)
        if parities[1] % 2:
            s *= det_block
        return s

    # -- filters ----------------------------------------------------------

    def _mono_eigs(self, mono):
        p = Polynomial.monomial(self.n, mono, 1, "zeta")
        eigs = []
        for op in self._diag_ops:
            q = op.apply(p)
            if q.is_zero():
                eigs.append(Fraction(0))
            elif set(q.terms) == {tuple(mono)}:
                eigs.append(q.terms[tuple(mono)])
            else:
                raise ValueError("diagonal element acted off-diagonally")
        return eigs

    def unknowns_at_degree(self, degree):
        out = []
        for mono in monomial_basis(self.n, degree):
            eigs = self._mono_eigs(mono)
            ad_sign = [
                _prod(gd[0][j] ** mono[j] for j in range(self.n))
                for gd in self.gamma_data
            ]
            for lbl in self.labels:
                if any(
                    eigs[i] != feig[lbl]
                    for i, feig in enumerate(self._diag_fiber_eigs)
                ):
                    continue
                ok = True
                for gi, (ad, v_side, w_side, fs) in enumerate(self.gamma_data):
                    if w_side * fs[lbl] != v_side * ad_sign[gi]:
                        ok = False
                        break
                if ok:
                    out.append((mono, lbl))
        out.sort(key=lambda u: (monomial_key(u[0]), monomial_key(u[1])), reverse=True)
        return out

    # -- linear stages ------------------------------------------------------

    def equivariant_vectors(self, unknowns):
        """Kernel of the m'-offdiagonal equivariance constraints."""
        if not unknowns:
            return []
        ncols = len(unknowns)
        col_of = {u: i for i, u in enumerate(unknowns)}
        rows = {}

        def bump(key, col, val):
            row = rows.setdefault(key, {})
            row[col] = row.get(col, Fraction(0)) + val

        for zi, Z in enumerate(self.offdiag):
            op = dpi_hat(Z, self.source)
            act = self.fiber.act(Z, self.pd)
            for col, (mono, lbl) in enumerate(unknowns):
                image = op.apply(Polynomial.monomial(self.n, mono, 1, "zeta"))
                for om, c in image.terms.items():
                    bump((zi, lbl, om), col, c)
                # -A_{l', l} c_{(mono, l')} lands in the row (zi, l, mono):
                # read it column-wise via the transposed action
                for (outl, inl), a in act.items():
                    if outl != lbl:
                        continue
                    bump((zi, inl, mono), col, -a)
        if not rows:
            return [_unit_vector(ncols, i) for i in range(ncols)]
        dense = [[r.get(c, Fraction(0)) for c in range(ncols)] for r in rows.values()]
        return Matrix(dense, ncols).nullspace()

    def fsystem_vectors(self, unknowns, eq_vectors):
        if not eq_vectors:
            return []
        rows = {}
        for b, vec in enumerate(eq_vectors):
            for coeff, (mono, lbl) in zip(vec, unknowns):
                if not coeff:
                    continue
                p = Polynomial.monomial(self.n, mono, coeff, "zeta")
                for jop, op in enumerate(self.fsys_ops):
                    q = op.apply(p)
                    for om, c in q.terms.items():
                        row = rows.setdefault((jop, lbl, om), {})
                        row[b] = row.get(b, Fraction(0)) + c
        ncols = len(eq_vectors)
        if not rows:
            combo = [_unit_vector(ncols, i) for i in range(ncols)]
        else:
            dense = [[r.get(c, Fraction(0)) for c in range(ncols)] for r in rows.values()]
            combo = Matrix(dense, ncols).nullspace()
        out = []
        for cv in combo:
            full = [Fraction(0)] * len(unknowns)
            for b, w in enumerate(cv):
                if w:
                    for i, x in enumerate(eq_vectors[b]):
                        full[i] += w * x
            out.append(full)
        return out


def equivariant_basis(
    source: ScalarRepParams,
    target: TargetRepParams,
    degree: int,
    connected: bool = False,
    full_nilradical: bool = False,
) -> EquivariantSpace:
    """Step-2 space at one homogeneous degree, by brute-force nullspace."""
    ctx = _SolveContext(source, target, connected, full_nilradical)
    unknowns = ctx.unknowns_at_degree(degree)
    vectors = ctx.equivariant_vectors(unknowns)
    return EquivariantSpace(
        source, target, degree, unknowns, vectors, connected, full_nilradical
    )


def solve_fsystem(
    source: ScalarRepParams,
    target: TargetRepParams,
    degree_cap: int,
    connected: bool = False,
    full_nilradical: bool = False,
) -> SolutionSpace:
    """Exact basis of Sol(n_+; V, W) in homogeneous degrees <= degree_cap."""
    ctx = _SolveContext(source, target, connected, full_nilradical)
    solutions = []
    degrees = []
    sizes = {}
    for d in range(max(degree_cap, -1) + 1):
        unknowns = ctx.unknowns_at_degree(d)
        if not unknowns:
            continue
        eq_vectors = ctx.equivariant_vectors(unknowns)
        if not eq_vectors:
            continue
        sol_vectors = ctx.fsystem_vectors(unknowns, eq_vectors)
        if sol_vectors:
            # homogeneity bookkeeping: the constraints preserve degree, so
            # every solution vector lives in this single degree
            sizes[d] = (len(unknowns), len(eq_vectors), len(sol_vectors))
            degrees.append(d)
            solutions.extend(
                _vector_to_vvp(v, unknowns, source.n)
                for v in _canonicalize(sol_vectors)
            )
    return SolutionSpace(
        source,
        target,
        solutions,
        degrees,
        {
            "degree_cap": degree_cap,
            "sizes": sizes,
            "connected": connected,
            "full_nilradical": full_nilradical,
        },
    )


def solve_fsystem_full_nilradical(source, target, degree_cap, connected=False):
    return solve_fsystem(source, target, degree_cap, connected, full_nilradical=True)


def _canonicalize(vectors):
    """RREF the solution vectors for a unique canonical basis."""
    if not vectors:
        return []
    red, pivots = Matrix(vectors).rref()
    return [red.rows[i] for i in range(len(pivots))]


def weight_degree_cap(gap: Fraction) -> int:
    """Largest homogeneous degree compatible with the A'-weight gap nu - lambda."""
    if gap < 0:
        return -1
    return math.floor(gap)


# -- expected bases ---------------------------------------------------------


def psi_vector(m: int, ell: int, n: int) -> VectorValuedPolynomial:
    """psi_{(m,ell)} = zeta_n^m sum_l zeta^l tensor ytilde_l."""
    comps = {}
    for lbl in monomial_basis(n - 1, ell):
        mono = lbl + (m,)
        comps[lbl] = Polynomial.monomial(n, mono, 1, "zeta")
    return VectorValuedPolynomial(n, comps, "zeta")


def ido_symbol_vector(k: int, n: int) -> VectorValuedPolynomial:
    """Symbol of the order-k intertwining operator: sum zeta^k tensor ytilde_k."""
    comps = {}
    for lbl in monomial_basis(n, k):
        comps[lbl] = Polynomial.monomial(n, lbl, 1, "zeta")
    return VectorValuedPolynomial(n, comps, "zeta")


def vvp_coordinates(vvps):
    """Coefficient vectors of VVPs over their joint (monomial, label) support."""
    keys = sorted(
        {(m, l) for v in vvps for l, p in v.components.items() for m in p.terms},
        key=lambda u: (monomial_key(u[0]), monomial_key(u[1])),
        reverse=True,
    )
    out = []
    for v in vvps:
        vec = []
        for mono, lbl in keys:
            p = v.components.get(lbl)
            vec.append(p.terms.get(mono, Fraction(0)) if p is not None else Fraction(0))
        out.append(vec)
    return out


def same_solution_span(a, b) -> bool:
    """Do two lists of vector-valued polynomials span the same space?"""
    a, b = list(a), list(b)
    if not a and not b:
        return True
    coords = vvp_coordinates(a + b)
    ra = rank_of_vectors(coords[: len(a)])
    rb = rank_of_vectors(coords[len(a):])
    return ra == rb == rank_of_vectors(coords)


# -- classification scans -----------------------------------------------------

DEFAULT_SAMPLES = (Fraction(1, 3), Fraction(5), Fraction(-7, 2))


def classify_sl_cells(n, m_max, l_max, lambda_samples=DEFAULT_SAMPLES):
    cells = []
    for m in range(m_max + 1):
        for ell in range(l_max + 1):
            lams = [Fraction(1 - (m + ell))]
            for s in lambda_samples:
                s = Fraction(s)
                if s not in lams:
                    lams.append(s)
            for lam in lams:
                for alpha in (0, 1):
                    matched = sign_shift(alpha, m + ell)
                    for beta in (matched, sign_shift(matched, 1)):
                        cells.append((m, ell, lam, alpha, beta))
    return cells


def classify_sl_cell(n, cell):
    m, ell, lam, alpha, beta = cell
    lam = Fraction(lam)
    nu = lam + m + Fraction(n, n - 1) * ell
    q = SLQuadruple(alpha, beta, ell, lam, nu).canonical(n)
    if n == 2:
        target = TargetRepParams.sl(n, nu, ell=0, beta=q.beta)
    else:
        target = TargetRepParams.sl(n, nu, ell=ell, beta=beta)
    source = ScalarRepParams.sl(n, lam, alpha)
    sol = solve_fsystem(source, target, weight_degree_cap(nu - lam))
    predicted = predicted_dim_sl(q, n)
    expected = _expected_sl_basis(q, n)
    ok = sol.dim == predicted and same_solution_span(sol.basis, expected)
    return {
        "flavor": "sl",
        "n": n,
        "alpha": sign_str(alpha),
        "beta": sign_str(beta),
        "l": ell,
        "lambda": str(lam),
        "nu": str(nu),
        "predicted_dim": predicted,
        "computed_dim": sol.dim,
        "basis_symbols": "; ".join(str(v) for v in sol.basis),
        "ok": ok,
    }


def _folded_psi(m: int, ell: int) -> VectorValuedPolynomial:
    """n = 2 picture: psi_{(m,ell)} = zeta2^m zeta1^ell on the trivial fiber."""
    return VectorValuedPolynomial(
        2, {(0,): Polynomial.monomial(2, (ell, m), 1, "zeta")}, "zeta"
    )


def _expected_sl_basis(q: SLQuadruple, n: int):
    rec = in_lambda_sl(q, n)
    if n == 2:
        if rec["sl_plus"]:
            w = rec["sl_plus"]
            return [_folded_psi(w["m"] + 2 * w["ell"], 0), _folded_psi(w["m"], w["ell"])]
        if rec["sl1"]:
            return [_folded_psi(rec["sl1"]["m"], 0)]
        return []
    if rec["sl2"]:
        return [psi_vector(rec["sl2"]["m"], rec["sl2"]["ell"], n)]
    if rec["sl1"]:
        return [psi_vector(rec["sl1"]["m"], 0, n)]
    return []


def classify_gl_cells(
    n, m_max, l_max, lambda_samples=DEFAULT_SAMPLES, lambda2_samples=(Fraction(0), Fraction(1, 2))
):
    cells = []
    for m in range(m_max + 1):
        for ell in range(l_max + 1):
            lams = [Fraction(1 - (m + ell))]
            for s in lambda_samples:
                s = Fraction(s)
                if s not in lams:
                    lams.append(s)
            for lam1 in lams:
                for lam2 in lambda2_samples:
                    for a1 in (0, 1):
                        matched = sign_shift(a1, m + ell)
                        for b1 in (matched, sign_shift(matched, 1)):
                            cells.append((m, ell, lam1, Fraction(lam2), a1, b1))
    return cells


def classify_gl_cell(n, cell):
    m, ell, lam1, lam2, a1, b1 = cell
    lam1, lam2 = Fraction(lam1), Fraction(lam2)
    a2 = b2 = 0
    nu1 = lam1 + m + Fraction(n, n - 1) * ell
    nu2 = lam2 - Fraction(ell, n - 1)
    t = GLTuple((a1, a2), (b1, b2), ell, (lam1, lam2), (nu1, nu2))
    source = ScalarRepParams.gl(n, lam1, lam2, a1, a2)
    target = TargetRepParams.gl(n, nu1, nu2, ell=ell, beta1=b1, beta2=b2)
    sol = solve_fsystem(source, target, weight_degree_cap(nu1 - lam1))
    predicted = predicted_dim_gl(t, n)
    expected = _expected_gl_basis(t, n)
    ok = sol.dim == predicted and same_solution_span(sol.basis, expected)
    return {
        "flavor": "gl",
        "n": n,
        "alpha": f"{sign_str(a1)},{sign_str(a2)}",
        "beta": f"{sign_str(b1)},{sign_str(b2)}",
        "l": ell,
        "lambda": f"{lam1},{lam2}",
        "nu": f"{nu1},{nu2}",
        "predicted_dim": predicted,
        "computed_dim": sol.dim,
        "basis_symbols": "; ".join(str(v) for v in sol.basis),
        "ok": ok,
    }


def _expected_gl_basis(t: GLTuple, n: int):
    rec = in_lambda_gl(t, n)
    if rec["gl2"]:
        return [psi_vector(rec["gl2"]["m"], rec["gl2"]["ell"], n)]
    if rec["gl1"]:
        return [psi_vector(rec["gl1"]["m"], 0, n)]
    return []


def classify_ido_cells(n, k_max, lambda_samples=DEFAULT_SAMPLES, flavor=SL,
                       lambda2_samples=(Fraction(0),)):
    cells = []
    for k in range(k_max + 1):
        lams = [Fraction(1 - k)]
        for s in lambda_samples:
            s = Fraction(s)
            if s not in lams:
                lams.append(s)
        for lam in lams:
            if flavor == SL:
                cells.append((k, lam, None))
            else:
                for lam2 in lambda2_samples:
                    cells.append((k, lam, Fraction(lam2)))
    return cells


def classify_ido_cell(n, cell, flavor=SL):
    k, lam, lam2 = cell
    lam = Fraction(lam)
    alpha = 0
    delta = sign_shift(alpha, k)
    tau = lam + Fraction(n + 1, n) * k
    if flavor == SL:
        source = ScalarRepParams.sl(n, lam, alpha)
        target = TargetRepParams.sl(n, tau, ell=k, beta=delta)
        predicted = predicted_dim_ido(n, "sl", alpha, delta, k, lam, tau)
        lam_str, tau_str = str(lam), str(tau)
        alpha_str, delta_str = sign_str(alpha), sign_str(delta)
    else:
        tau2 = lam2 - Fraction(k, n)
        source = ScalarRepParams.gl(n, lam, lam2, alpha, 0)
        target = TargetRepParams.gl(n, tau, tau2, ell=k, beta1=delta, beta2=0)
        predicted = predicted_dim_ido(
            n, "gl", (alpha, 0), (delta, 0), k, (lam, lam2), (tau, tau2)
        )
        lam_str, tau_str = f"{lam},{lam2}", f"{tau},{tau2}"
        alpha_str, delta_str = f"{sign_str(alpha)},+", f"{sign_str(delta)},+"
    sol = solve_fsystem(source, target, k, full_nilradical=True)
    expected = [ido_symbol_vector(k, n)] if predicted == 1 else []
    ok = sol.dim == predicted and same_solution_span(sol.basis, expected)
    return {
        "flavor": f"{flavor}-ido",
        "n": n,
        "alpha": alpha_str,
        "beta": delta_str,
        "l": k,
        "lambda": lam_str,
        "nu": tau_str,
        "predicted_dim": predicted,
        "computed_dim": sol.dim,
        "basis_symbols": "; ".join(str(v) for v in sol.basis),
        "ok": ok,
    }


def classify(
    n,
    flavor=SL,
    m_max=3,
    l_max=3,
    lambda_samples=DEFAULT_SAMPLES,
    lambda2_samples=(Fraction(0), Fraction(1, 2)),
    ido=False,
    k_max=4,
):
    """Full classification table; every row carries predicted vs computed."""
    rows = []
    if ido:
        for cell in classify_ido_cells(n, k_max, lambda_samples, flavor, lambda2_samples):
            rows.append(classify_ido_cell(n, cell, flavor))
    elif flavor == SL:
        for cell in classify_sl_cells(n, m_max, l_max, lambda_samples):
            rows.append(classify_sl_cell(n, cell))
    else:
        for cell in classify_gl_cells(n, m_max, l_max, lambda_samples, lambda2_samples):
            rows.append(classify_gl_cell(n, cell))
    rows.sort(
        key=lambda r: (r["flavor"], r["n"], r["l"], r["lambda"], r["nu"], r["alpha"], r["beta"])
    )
    return rows
