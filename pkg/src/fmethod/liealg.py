"""Matrix realization of sl(n+1)/gl(n+1), the subalgebra g', and parabolic data.

Everything lives inside one algebra of (n+1)x(n+1) rational matrices; g' is
the upper-left n-block with last row and column zero.  The Gelfand-Naimark
decomposition g = n_- + l + n_+ is the block split along the first row and
column, eigenspaces of ad(H0~) with eigenvalues -(n+1)/n, 0, +(n+1)/n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

SL = "sl"
GL = "gl"


@dataclass(frozen=True)
class LieElement:
    """Square rational matrix with a group-flavor tag."""

    entries: tuple  # tuple of tuples of Fraction
    flavor: str = SL

    @classmethod
    def from_rows(cls, rows, flavor=SL):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls(entries, flavor)

    @classmethod
    def zero(cls, size, flavor=SL):
        return cls.from_rows([[0] * size for _ in range(size)], flavor)

    @classmethod
    def matrix_unit(cls, size, i, j, flavor=SL):
        """E_{i,j} with 1-based indices."""
        rows = [[0] * size for _ in range(size)]
        rows[i - 1][j - 1] = 1
        return cls.from_rows(rows, flavor)

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def trace(self):
        return sum((self.entries[i][i] for i in range(self.size)), Fraction(0))

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def add(self, other):
        self._check(other)
        return LieElement(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
            self.flavor,
        )

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, s):
        s = Fraction(s)
        return LieElement(
            tuple(tuple(s * a for a in row) for row in self.entries), self.flavor
        )

    def matmul(self, other):
        self._check(other)
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(n)), Fraction(0))
                )
            rows.append(tuple(row))
        return LieElement(tuple(rows), self.flavor)

    def _check(self, other):
        if self.size != other.size:
            raise ValueError("size mismatch")
        if self.flavor != other.flavor:
            raise ValueError("flavor mismatch")

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def bracket(X: LieElement, Y: LieElement) -> LieElement:
    """[X, Y] = XY - YX."""
    return X.matmul(Y).sub(Y.matmul(X))


def trace_form(X: LieElement, Y: LieElement) -> Fraction:
    return X.matmul(Y).trace()


@dataclass(frozen=True)
class ParabolicData:
    """Basis data for the pair (g, g') and the maximal parabolics P, P'.

    `n` is the rank parameter: g = sl(n+1) or gl(n+1), g' the embedded
    sl(n)/gl(n).  n_+ has dimension n, n_+' dimension n-1.
    """

    n: int
    flavor: str = SL

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be >= 2")
        if self.flavor not in (SL, GL):
            raise ValueError("flavor must be 'sl' or 'gl'")

    @property
    def size(self):
        return self.n + 1

    def unit(self, i, j):
        return LieElement.matrix_unit(self.size, i, j, self.flavor)

    def n_plus(self, j):
        """N_j^+ = E_{1,j+1}, j = 1..n."""
        return self.unit(1, j + 1)

    def n_minus(self, j):
        """N_j^- = E_{j+1,1}, j = 1..n."""
        return self.unit(j + 1, 1)

    @property
    def h0_tilde(self):
        n = self.n
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        rows[0][0] = Fraction(n, n)
        for r in range(1, self.size):
            rows[r][r] = Fraction(-1, n)
        return LieElement.from_rows(rows, self.flavor)

    @property
    def h0_tilde_prime(self):
        n = self.n
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        rows[0][0] = Fraction(n - 1, n - 1)
        for r in range(1, n):
            rows[r][r] = Fraction(-1, n - 1)
        return LieElement.from_rows(rows, self.flavor)

    @property
    def j0(self):
        if self.flavor != GL:
            raise ValueError("J0 exists only for GL")
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        for r in range(1, self.size):
            rows[r][r] = Fraction(1, self.n)
        return LieElement.from_rows(rows, self.flavor)

    @property
    def j0_prime(self):
        if self.flavor != GL:
            raise ValueError("J0' exists only for GL")
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        for r in range(1, self.n):
            rows[r][r] = Fraction(1, self.n - 1)
        return LieElement.from_rows(rows, self.flavor)

    # -- bases ----------------------------------------------------------

    def n_plus_basis(self, primed=False):
        top = self.n - 1 if primed else self.n
        return [self.n_plus(j) for j in range(1, top + 1)]

    def n_minus_basis(self, primed=False):
        top = self.n - 1 if primed else self.n
        return [self.n_minus(j) for j in range(1, top + 1)]

    def m_basis(self, primed=False):
        """Basis of m (sl(n)-block, rows 2..n+1) or m' (rows 2..n)."""
        top = self.n if primed else self.n + 1
        out = []
        for i in range(2, top + 1):
            for j in range(2, top + 1):
                if i != j:
                    out.append(self.unit(i, j))
        for i in range(2, top):
            out.append(self.unit(i, i).sub(self.unit(i + 1, i + 1)))
        return out

    def m_cartan(self, primed=False):
        top = self.n if primed else self.n + 1
        return [self.unit(i, i).sub(self.unit(i + 1, i + 1)) for i in range(2, top)]

    def m_offdiag(self, primed=False):
        top = self.n if primed else self.n + 1
        return [
            self.unit(i, j)
            for i in range(2, top + 1)
            for j in range(2, top + 1)
            if i != j
        ]

    def l_basis(self, primed=False):
        out = [self.h0_tilde_prime if primed else self.h0_tilde]
        if self.flavor == GL:
            out.append(self.j0_prime if primed else self.j0)
        out.extend(self.m_basis(primed))
        return out

    def g_basis(self, primed=False):
        return self.n_minus_basis(primed) + self.l_basis(primed) + self.n_plus_basis(primed)

    # -- disconnected generators -----------------------------------------

    def gamma_elements(self, primed=False):
        """Group generators of the component group of M (resp. M').

        SL: one generator diag(-1, 1, .., 1, -1[, 1]).  GL: two generators,
        diag(-1, 1, .., 1) and diag(1, .., 1, -1[, 1]).
        """
        size = self.size
        last = self.n if primed else self.n + 1  # position of the -1 in the block
        if self.flavor == SL:
            diag = [Fraction(1)] * size
            diag[0] = Fraction(-1)
            diag[last - 1] = Fraction(-1)
            return [self._diag(diag)]
        g1 = [Fraction(1)] * size
        g1[0] = Fraction(-1)
        g2 = [Fraction(1)] * size
        g2[last - 1] = Fraction(-1)
        return [self._diag(g1), self._diag(g2)]

    def _diag(self, diag):
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        for i, d in enumerate(diag):
            rows[i][i] = d
        return LieElement.from_rows(rows, self.flavor)

    # -- projections and characters ---------------------------------------

    def gn_project(self, X: LieElement):
        """Split X into (n_- part, l part, n_+ part)."""
        size = self.size
        lower = [[Fraction(0)] * size for _ in range(size)]
        upper = [[Fraction(0)] * size for _ in range(size)]
        middle = [[Fraction(0)] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                v = X.entries[i][j]
                if i > 0 and j == 0:
                    lower[i][j] = v
                elif i == 0 and j > 0:
                    upper[i][j] = v
                else:
                    middle[i][j] = v
        mk = lambda rows: LieElement.from_rows(rows, self.flavor)
        return mk(lower), mk(middle), mk(upper)

    def dchi(self, Z: LieElement) -> Fraction:
        """Differential of the A-character, normalized dchi(H0~) = 1."""
        return Z.entries[0][0]

    def dchi2(self, Z: LieElement) -> Fraction:
        """GL second character, normalized dchi2(J0) = 1."""
        return Z.trace()

    def two_rho(self):
        """Weights of det Ad on n_+ against (dchi[, dchi2])."""
        if self.flavor == SL:
            return (Fraction(self.n + 1),)
        return (Fraction(self.n + 1), Fraction(-1))

    def two_rho_prime(self):
        if self.flavor == SL:
            return (Fraction(self.n),)
        return (Fraction(self.n), Fraction(-1))

    def in_g_prime(self, X: LieElement) -> bool:
        size = self.size
        return all(
            X.entries[i][j] == 0
            for i in range(size)
            for j in range(size)
            if i == size - 1 or j == size - 1
        )


def ad_exp_minus(x, X: LieElement, pd: ParabolicData) -> LieElement:
    """Ad(exp(-sum_j x_j N_j^-)) X; the series stops after the ad^2 term."""
    Y = LieElement.zero(pd.size, pd.flavor)
    for j, xv in enumerate(x, start=1):
        Y = Y.add(pd.n_minus(j).scale(xv))
    ad1 = bracket(Y, X)
    ad2 = bracket(Y, ad1)
    return X.sub(ad1).add(ad2.scale(Fraction(1, 2)))


@lru_cache(maxsize=None)
def parabolic(n: int, flavor: str = SL) -> ParabolicData:
    return ParabolicData(n, flavor)
