"""Infinitesimal representations on polynomial models.

The single engine is `induced_operator`: for X in g it evaluates the
noncompact-picture formula

    dpi(X) f = (fiber action of the l-part of Ad(nbar^{-1})X) f
               - dR((Ad(nbar^{-1})X)_{n_-}) f

symbolically in the coordinates x of n_-.  Because n_- is abelian the
Ad-series stops at the quadratic term, so the l-part and the n_--part are
matrices of polynomials of degree <= 2 and the result is an exact Weyl
operator (scalar fiber) or a matrix of Weyl operators (vector fiber).

Weight bookkeeping: the A-characters are normalized by dchi(H0~) = 1 and,
for GL, dchi2(J0) = 1.  The representation dpi_lambda uses the inducing
weight itself; the dual-twisted dpi_lambda_star uses 2rho - lambda, where
2rho = (n+1) on H0~ and -1 on J0.  With this normalization the Fourier
transform of dpi_lambda_star(N_j^+) satisfies, on degree-k polynomials,

    -zeta_j o dpi_hat(N_j^+) = (lambda - 1 + k) * theta_j,

the identity every classification below rests on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import Polynomial, monomial_basis, monomial_key
from .liealg import GL, SL, LieElement, ParabolicData, bracket, parabolic
from .weyl import WeylElement


@dataclass(frozen=True)
class ScalarRepParams:
    """Parameters (alpha, lambda) of the line-bundle representation.

    Sign characters are parities: 0 for +, 1 for -.  For GL both `alpha`
    and `lam` are pairs.
    """

    n: int
    flavor: str = SL
    alpha: tuple = (0,)
    lam: tuple = (Fraction(0),)

    @classmethod
    def sl(cls, n, lam, alpha=0):
        return cls(n, SL, (int(alpha) % 2,), (Fraction(lam),))

    @classmethod
    def gl(cls, n, lam1, lam2, alpha1=0, alpha2=0):
        return cls(
            n, GL, (int(alpha1) % 2, int(alpha2) % 2), (Fraction(lam1), Fraction(lam2))
        )

    def weights(self):
        return self.lam

    def dual_weights(self):
        """2rho - lambda, the inducing weight of the pairing-dual bundle."""
        pd = parabolic(self.n, self.flavor)
        return tuple(r - l for r, l in zip(pd.two_rho(), self.lam))


@dataclass(frozen=True)
class TargetRepParams:
    """Parameters (beta, varpi = poly^ell, nu) of the target bundle on RP^{n-1}."""

    n: int
    flavor: str = SL
    beta: tuple = (0,)
    nu: tuple = (Fraction(0),)
    ell: int = 0

    @classmethod
    def sl(cls, n, nu, ell=0, beta=0):
        return cls(n, SL, (int(beta) % 2,), (Fraction(nu),), ell)

    @classmethod
    def gl(cls, n, nu1, nu2, ell=0, beta1=0, beta2=0):
        return cls(
            n, GL, (int(beta1) % 2, int(beta2) % 2), (Fraction(nu1), Fraction(nu2)), ell
        )

    def canonical(self):
        """For n = 2 fold poly^ell into the sign character (ell -> 0)."""
        if self.n != 2 or self.ell == 0:
            return self
        beta = ((self.beta[0] + self.ell) % 2,) + self.beta[1:]
        return TargetRepParams(self.n, self.flavor, beta, self.nu, 0)


class VectorValuedPolynomial:
    """Element of (polynomials in `arity` vars) tensor (fiber basis labels)."""

    __slots__ = ("arity", "components", "var")

    def __init__(self, arity, components=None, var="x"):
        self.arity = arity
        self.var = var
        clean = {}
        if components:
            for label, poly in components.items():
                if not poly.is_zero():
                    clean[tuple(label)] = poly
        self.components = clean

    @classmethod
    def zero(cls, arity, var="x"):
        return cls(arity, {}, var)

    def is_zero(self):
        return not self.components

    def __add__(self, other):
        comps = dict(self.components)
        for lbl, p in other.components.items():
            q = comps.get(lbl)
            s = p if q is None else q + p
            if s.is_zero():
                comps.pop(lbl, None)
            else:
                comps[lbl] = s
        return VectorValuedPolynomial(self.arity, comps, self.var)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return VectorValuedPolynomial(
            self.arity, {l: p.scale(s) for l, p in self.components.items()}, self.var
        )

    def mul_poly(self, q: Polynomial):
        return VectorValuedPolynomial(
            self.arity, {l: p * q for l, p in self.components.items()}, self.var
        )

    def __eq__(self, other):
        if not isinstance(other, VectorValuedPolynomial):
            return NotImplemented
        return self.arity == other.arity and self.components == other.components

    def sorted_items(self):
        return sorted(
            self.components.items(), key=lambda kv: monomial_key(kv[0]), reverse=True
        )

    def __str__(self):
        if not self.components:
            return "0"
        bits = []
        for label, poly in self.sorted_items():
            if label and any(label):
                ylabel = "*".join(
                    f"y{i + 1}" + (f"^{e}" if e > 1 else "")
                    for i, e in enumerate(label)
                    if e
                )
                bits.append(f"({poly})*{ylabel}")
            elif label:
                bits.append(f"({poly})")
            else:
                bits.append(str(poly))
        return " + ".join(bits)

    __repr__ = __str__


class OperatorOnVV:
    """Matrix of Weyl operators acting on VectorValuedPolynomial."""

    __slots__ = ("arity", "in_labels", "out_labels", "terms", "var")

    def __init__(self, arity, in_labels, out_labels, terms, var="x"):
        self.arity = arity
        self.in_labels = tuple(in_labels)
        self.out_labels = tuple(out_labels)
        self.terms = {k: w for k, w in terms.items() if not w.is_zero()}
        self.var = var

    def apply(self, v: VectorValuedPolynomial) -> VectorValuedPolynomial:
        comps = {}
        for (out, inp), op in self.terms.items():
            p = v.components.get(inp)
            if p is None:
                continue
            q = op.apply(p)
            if q.is_zero():
                continue
            cur = comps.get(out)
            comps[out] = q if cur is None else cur + q
        return VectorValuedPolynomial(self.arity, comps, self.var)

    def fourier(self):
        terms = {k: w.fourier() for k, w in self.terms.items()}
        var = next(iter(terms.values())).var if terms else self.var
        return OperatorOnVV(self.arity, self.in_labels, self.out_labels, terms, var)

    def entry(self, out, inp) -> WeylElement:
        return self.terms.get((tuple(out), tuple(inp)), WeylElement.zero(self.arity, self.var))

    def scalar_entry(self) -> WeylElement:
        if self.in_labels != ((),) or self.out_labels != ((),):
            raise ValueError("not a scalar operator")
        return self.entry((), ())


# -- fibers ----------------------------------------------------------------


@dataclass(frozen=True)
class ScalarFiber:
    """One-dimensional fiber: the l-part acts by characters only."""

    weights: tuple  # against (dchi [, dchi2])

    def labels(self, pd):
        return [()]

    def act(self, L: LieElement, pd: ParabolicData) -> dict:
        val = self.weights[0] * L.entries[0][0]
        if len(self.weights) > 1:
            val += self.weights[1] * L.trace()
        return {((), ()): val} if val else {}


@dataclass(frozen=True)
class SymFiber:
    """S^degree of the m-block (natural action) or its dual (poly picture).

    `block` is the number of block coordinates: n-1 for the primed pair,
    n for the full one.  Characters act along (dchi [, dchi2]) with the
    given weights; the m-part acts by the derivation representation on
    monomials e^k, or minus its transpose on the dual basis ytilde.
    """

    degree: int
    block: int
    weights: tuple
    dual: bool = False

    def labels(self, pd):
        return monomial_basis(self.block, self.degree)

    def act(self, L: LieElement, pd: ParabolicData) -> dict:
        c1 = L.entries[0][0]
        Z = L.sub((pd.h0_tilde_prime if self.block == pd.n - 1 else pd.h0_tilde).scale(c1))
        c2 = None
        if pd.flavor == GL:
            c2 = L.trace()
            Z = Z.sub((pd.j0_prime if self.block == pd.n - 1 else pd.j0).scale(c2))
        weight = self.weights[0] * c1
        if c2 is not None and len(self.weights) > 1:
            weight += self.weights[1] * c2
        B = [[Z.entries[i][j] for j in range(1, self.block + 1)] for i in range(1, self.block + 1)]
        out = {}
        for k in self.labels(pd):
            for j in range(self.block):
                if k[j] == 0:
                    continue
                for i in range(self.block):
                    coeff = Fraction(k[j]) * B[i][j]
                    if not coeff:
                        continue
                    kk = list(k)
                    kk[j] -= 1
                    kk[i] += 1
                    kk = tuple(kk)
                    key = (k, kk) if self.dual else (kk, k)
                    sgn = -coeff if self.dual else coeff
                    out[key] = out.get(key, Fraction(0)) + sgn
        if weight:
            for k in self.labels(pd):
                out[(k, k)] = out.get((k, k), Fraction(0)) + weight
        return {k: v for k, v in out.items() if v}


# -- the engine --------------------------------------------------------------


@lru_cache(maxsize=None)
def _ad_series(X: LieElement, pd: ParabolicData, num_x: int):
    """Ad(exp(-sum x_k N_k^-)) X as {x-monomial: LieElement}."""
    series = {(0,) * num_x: X}

    def put(mono, elt):
        if elt.is_zero():
            return
        cur = series.get(mono)
        series[mono] = elt if cur is None else cur.add(elt)

    firsts = []
    for k in range(1, num_x + 1):
        Bk = bracket(pd.n_minus(k), X)
        firsts.append(Bk)
        mono = [0] * num_x
        mono[k - 1] = 1
        put(tuple(mono), Bk.scale(-1))
    for k in range(1, num_x + 1):
        for l in range(1, num_x + 1):
            Ckl = bracket(pd.n_minus(k), firsts[l - 1])
            if Ckl.is_zero():
                continue
            mono = [0] * num_x
            mono[k - 1] += 1
            mono[l - 1] += 1
            put(tuple(mono), Ckl.scale(Fraction(1, 2)))
    return {m: e for m, e in series.items() if not e.is_zero()}


def induced_operator(X: LieElement, pd: ParabolicData, num_x: int, fiber) -> OperatorOnVV:
    """The noncompact-picture action of X on polynomials tensor fiber."""
    series = _ad_series(X, pd, num_x)
    labels = fiber.labels(pd)
    var = "x"
    terms = {}

    def add(key, op):
        if op.is_zero():
            return
        cur = terms.get(key)
        s = op if cur is None else cur + op
        if s.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = s

    for mono, L in series.items():
        lower, middle, upper = pd.gn_project(L)
        # n_- part: -dR = -sum g_j(x) d_j ; dR(N_j^-) = d/dx_j
        for j in range(1, num_x + 1):
            g = lower.entries[j][0]
            if g:
                op = WeylElement(
                    num_x,
                    {
                        _unit_alpha(num_x, j - 1): Polynomial.monomial(num_x, mono, -g, var)
                    },
                    var,
                )
                for lbl in labels:
                    add((lbl, lbl), op)
        # components of n_- outside the active coordinates must vanish;
        # the n_+ part (`upper`) acts trivially in this picture
        for j in range(num_x + 1, pd.n + 1):
            if lower.entries[j][0] != 0:
                raise ValueError("element leaves the active subalgebra")
        # l part: fiber action with polynomial coefficient x^mono
        for (out, inp), val in fiber.act(middle, pd).items():
            op = WeylElement(
                num_x,
                {(0,) * num_x: Polynomial.monomial(num_x, mono, val, var)},
                var,
            )
            add((out, inp), op)
    return OperatorOnVV(num_x, labels, labels, terms, var)


def _unit_alpha(arity, index):
    a = [0] * arity
    a[index] = 1
    return tuple(a)


# -- public builders ----------------------------------------------------------


def _check_in_g(X: LieElement, pd: ParabolicData):
    if X.size != pd.size:
        raise ValueError("element size does not match the algebra")
    if pd.flavor == SL and X.trace() != 0:
        raise ValueError("sl element must be traceless")


@lru_cache(maxsize=None)
def dpi_lambda(X: LieElement, params: ScalarRepParams) -> WeylElement:
    """Action of X on the source line bundle, coordinates x_1..x_n."""
    pd = parabolic(params.n, params.flavor)
    _check_in_g(X, pd)
    fiber = ScalarFiber(params.weights())
    return induced_operator(X, pd, params.n, fiber).scalar_entry()


@lru_cache(maxsize=None)
def dpi_lambda_star(X: LieElement, params: ScalarRepParams) -> WeylElement:
    """Dual-twisted action (inducing weight 2rho - lambda)."""
    pd = parabolic(params.n, params.flavor)
    _check_in_g(X, pd)
    fiber = ScalarFiber(params.dual_weights())
    return induced_operator(X, pd, params.n, fiber).scalar_entry()


@lru_cache(maxsize=None)
def dpi_hat(X: LieElement, params: ScalarRepParams) -> WeylElement:
    """Fourier transform of dpi_lambda_star: the Verma-side action on Pol(zeta)."""
    return dpi_lambda_star(X, params).fourier()


@lru_cache(maxsize=None)
def dpi_target(X: LieElement, params: TargetRepParams) -> OperatorOnVV:
    """Action of X in g' on target sections: (n-1 variables) tensor Pol^ell."""
    pd = parabolic(params.n, params.flavor)
    if not pd.in_g_prime(X):
        raise ValueError("dpi_target needs X in g'")
    fiber = SymFiber(params.ell, params.n - 1, params.nu, dual=True)
    return induced_operator(X, pd, params.n - 1, fiber)


# -- closed forms (test oracles) ----------------------------------------------


def nplus_closed_form(j: int, n: int, weight: Fraction) -> WeylElement:
    """x_j(weight + E_x) on n variables (1-based j)."""
    euler = WeylElement.euler(n)
    shift = WeylElement.identity(n).scale(weight)
    xj = WeylElement.from_polynomial(Polynomial.variable(n, j - 1))
    return xj.compose(euler + shift)


def nminus_closed_form(j: int, n: int) -> WeylElement:
    return WeylElement.partial(n, j - 1).scale(-1)
