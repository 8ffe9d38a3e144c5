"""Exact scalars, sparse multivariate polynomials, and linear algebra over Q.

Monomials are exponent tuples of fixed arity.  The global term order is
graded lexicographic: compare total degree first, then the exponent tuple.
All canonical listings (monomial bases, printed polynomials, solver
unknowns) use this order, descending, so every downstream output is
deterministic.

Values are immutable after construction and safe to share.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

Rational = Fraction

Monomial = tuple  # exponent tuple, arity fixed by the ambient ring


def monomial_key(m: Monomial):
    """Graded-lex sort key (ascending)."""
    return (sum(m), m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_basis(arity: int, degree: int) -> list[Monomial]:
    """All monomials of exact total degree, graded-lex order (descending)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if arity == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, arity)
    assert len(out) == math.comb(degree + arity - 1, arity - 1)
    return out


def monomials_up_to(arity: int, degree: int) -> list[Monomial]:
    out = []
    for d in range(degree + 1):
        out.extend(monomial_basis(arity, d))
    return out


class Polynomial:
    """Sparse polynomial over Q: map monomial -> nonzero coefficient.

    `var` is a role prefix ("x", "z", "zeta", "y") used for printing and to
    guard against mixing the position picture with the Fourier picture.
    """

    __slots__ = ("arity", "terms", "var")

    def __init__(self, arity: int, terms=None, var: str = "x"):
        self.arity = arity
        self.var = var
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    if len(mono) != arity:
                        raise ValueError("monomial arity mismatch")
                    clean[tuple(mono)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, arity, var="x"):
        return cls(arity, {}, var)

    @classmethod
    def one(cls, arity, var="x"):
        return cls(arity, {(0,) * arity: Fraction(1)}, var)

    @classmethod
    def constant(cls, arity, value, var="x"):
        return cls(arity, {(0,) * arity: Fraction(value)}, var)

    @classmethod
    def variable(cls, arity, index, var="x"):
        """The coordinate function number `index` (0-based)."""
        expo = [0] * arity
        expo[index] = 1
        return cls(arity, {tuple(expo): Fraction(1)}, var)

    @classmethod
    def monomial(cls, arity, expo, coeff=1, var="x"):
        return cls(arity, {tuple(expo): Fraction(coeff)}, var)

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * self.arity, Fraction(0))

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.arity,
            {m: c for m, c in self.terms.items() if sum(m) == degree},
            self.var,
        )

    # -- arithmetic ----------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        if self.var != other.var:
            raise ValueError(f"variable role mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.arity, other, self.var)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, Fraction(0)) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(self.arity, terms, self.var)

    def __neg__(self):
        return Polynomial(self.arity, {m: -c for m, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.arity, other, self.var)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.arity, terms, self.var)

    __rmul__ = __mul__

    def scale(self, scalar) -> "Polynomial":
        s = Fraction(scalar)
        if not s:
            return Polynomial.zero(self.arity, self.var)
        return Polynomial(self.arity, {m: c * s for m, c in self.terms.items()}, self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.arity, self.var)
        for _ in range(k):
            result = result * self
        return result

    def derivative(self, index: int, order: int = 1) -> "Polynomial":
        terms = {}
        for m, c in self.terms.items():
            e = m[index]
            if e < order:
                continue
            fall = Fraction(1)
            for i in range(order):
                fall *= e - i
            mm = list(m)
            mm[index] = e - order
            terms[tuple(mm)] = terms.get(tuple(mm), Fraction(0)) + c * fall
        return Polynomial(self.arity, terms, self.var)

    def derivative_multi(self, alpha) -> "Polynomial":
        p = self
        for i, k in enumerate(alpha):
            if k:
                p = p.derivative(i, k)
        return p

    def set_var_zero(self, index: int) -> "Polynomial":
        """Substitute coordinate `index` = 0."""
        terms = {m: c for m, c in self.terms.items() if m[index] == 0}
        return Polynomial(self.arity, terms, self.var)

    def drop_last_var(self) -> "Polynomial":
        """Forget the last coordinate (which must not occur)."""
        terms = {}
        for m, c in self.terms.items():
            if m[-1] != 0:
                raise ValueError("last variable occurs")
            terms[m[:-1]] = c
        return Polynomial(self.arity - 1, terms, self.var)

    def pad_vars(self, arity: int) -> "Polynomial":
        """Reinterpret in a larger ring, new trailing variables unused."""
        if arity < self.arity:
            raise ValueError("cannot shrink")
        pad = (0,) * (arity - self.arity)
        return Polynomial(arity, {m + pad: c for m, c in self.terms.items()}, self.var)

    def with_var(self, var: str) -> "Polynomial":
        return Polynomial(self.arity, self.terms, var)

    # -- equality / printing --------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if self.is_constant() or self.is_zero():
                return self.terms.get((0,) * self.arity, Fraction(0)) == Fraction(other)
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def __str__(self):
        return format_polynomial(self)

    __repr__ = __str__


def format_monomial(mono, var: str) -> str:
    parts = []
    for i, e in enumerate(mono):
        if e == 0:
            continue
        name = f"{var}{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero():
        return "0"
    chunks = []
    for mono, coeff in p.sorted_terms():
        mstr = format_monomial(mono, p.var)
        if not mstr:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = mstr
        else:
            body = f"{abs(coeff)}*{mstr}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


_TERM_RE = re.compile(r"([a-zA-Z]+)(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, arity: int, var: str) -> Polynomial:
    """Inverse of format_polynomial (exact round trip on canonical form)."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(arity, var)
    text = text.replace("- ", "-").replace("+ ", "+")
    pieces = re.split(r"(?=[+-])", text)
    terms = {}
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        sign = Fraction(1)
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = Fraction(-1)
            piece = piece[1:]
        coeff = sign
        expo = [0] * arity
        for factor in piece.split("*"):
            factor = factor.strip()
            m = _TERM_RE.match(factor)
            if m:
                name, idx, power = m.group(1), int(m.group(2)), m.group(3)
                if name != var:
                    raise ValueError(f"unexpected variable {name!r}, ring uses {var!r}")
                expo[idx - 1] += int(power) if power else 1
            else:
                coeff *= Fraction(factor)
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return Polynomial(arity, terms, var)


class Matrix:
    """Dense exact matrix over Q."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        self.rows = [[Fraction(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column list)."""
        m = [row[:] for row in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            pv = m[r][c]
            m[r] = [x / pv for x in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        out = Matrix(m, self.ncols)
        return out, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Fraction]]:
        """Basis of the kernel, RREF convention, first nonzero entry 1."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.ncols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -red.rows[r][fc]
            lead = next(x for x in v if x != 0)
            basis.append([x / lead for x in v])
        return basis

    def mul_vector(self, v):
        return [sum((row[j] * v[j] for j in range(self.ncols)), Fraction(0)) for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows and self.ncols == other.ncols

    def __repr__(self):
        return f"Matrix({self.rows})"


def nullspace(M: Matrix) -> list[list[Fraction]]:
    return M.nullspace()


def rank_of_vectors(vectors: list[list[Fraction]]) -> int:
    """Rank of a list of coordinate vectors (possibly empty)."""
    if not vectors:
        return 0
    return Matrix(vectors).rank()


def same_span(a: list[list[Fraction]], b: list[list[Fraction]]) -> bool:
    """Exact span equality via three rank computations."""
    ra = rank_of_vectors(a)
    rb = rank_of_vectors(b)
    if ra != rb:
        return False
    return rank_of_vectors(a + b) == ra
