"""The Weyl algebra in n variables and its algebraic Fourier transform.

Elements are kept in normal order: every term is a polynomial coefficient
multiplied from the left onto a monomial in the partial derivatives,
    D = sum_alpha  p_alpha(v) * d^alpha.
Composition expands the commutation relation  d_j v_i = delta_ij + v_i d_j
eagerly (full Leibniz), so equality of normal forms is equality of
operators.

The Fourier transform sends d/dv_i -> -w_i and v_i -> d/dw_i, where w is
the dual variable role ('x' <-> 'zeta'); it is an algebra isomorphism.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .algebra import Polynomial, format_monomial, monomial_key, monomials_up_to

DUAL_VAR = {"x": "zeta", "zeta": "x", "z": "zeta"}


class WeylElement:
    """Normal-ordered polynomial-coefficient differential operator."""

    __slots__ = ("arity", "terms", "var")

    def __init__(self, arity: int, terms=None, var: str = "x"):
        self.arity = arity
        self.var = var
        clean = {}
        if terms:
            for alpha, coeff in terms.items():
                if not isinstance(coeff, Polynomial):
                    coeff = Polynomial.constant(arity, coeff, var)
                if coeff.var != var:
                    coeff = coeff.with_var(var)
                if not coeff.is_zero():
                    if len(alpha) != arity:
                        raise ValueError("derivative multidegree arity mismatch")
                    clean[tuple(alpha)] = coeff
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, arity, var="x"):
        return cls(arity, {}, var)

    @classmethod
    def identity(cls, arity, var="x"):
        return cls(arity, {(0,) * arity: Polynomial.one(arity, var)}, var)

    @classmethod
    def from_polynomial(cls, p: Polynomial):
        """Multiplication operator by p."""
        return cls(p.arity, {(0,) * p.arity: p}, p.var)

    @classmethod
    def partial(cls, arity, index, var="x"):
        """d/dv_{index} (0-based index)."""
        alpha = [0] * arity
        alpha[index] = 1
        return cls(arity, {tuple(alpha): Polynomial.one(arity, var)}, var)

    @classmethod
    def derivative_monomial(cls, arity, alpha, coeff=1, var="x"):
        return cls(arity, {tuple(alpha): Polynomial.constant(arity, coeff, var)}, var)

    @classmethod
    def euler(cls, arity, var="x"):
        """E = sum_j v_j d/dv_j."""
        terms = {}
        for j in range(arity):
            alpha = [0] * arity
            alpha[j] = 1
            terms[tuple(alpha)] = Polynomial.variable(arity, j, var)
        return cls(arity, terms, var)

    # -- algebra ----------------------------------------------------------

    def _check(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        if self.var != other.var:
            raise ValueError(f"variable role mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement(self.arity, {(0,) * self.arity: other}, self.var)
        self._check(other)
        terms = dict(self.terms)
        for a, p in other.terms.items():
            q = terms.get(a)
            s = p if q is None else q + p
            if s.is_zero():
                terms.pop(a, None)
            else:
                terms[a] = s
        return WeylElement(self.arity, terms, self.var)

    def __neg__(self):
        return WeylElement(self.arity, {a: -p for a, p in self.terms.items()}, self.var)

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            other = WeylElement(self.arity, {(0,) * self.arity: other}, self.var)
        return self + (-other)

    def scale(self, s):
        return WeylElement(
            self.arity, {a: p.scale(s) for a, p in self.terms.items()}, self.var
        )

    def is_zero(self):
        return not self.terms

    def order(self) -> int:
        """Maximal total derivative order; -1 for zero."""
        if not self.terms:
            return -1
        return max(sum(a) for a in self.terms)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.arity != self.arity:
            raise ValueError("arity mismatch")
        if p.var != self.var:
            raise ValueError("variable role mismatch")
        out = Polynomial.zero(self.arity, self.var)
        for alpha, coeff in self.terms.items():
            out = out + coeff * p.derivative_multi(alpha)
        return out

    def compose(self, other: "WeylElement") -> "WeylElement":
        """Normal-ordered self o other (apply other first)."""
        self._check(other)
        n = self.arity
        result = {}
        for alpha, p in self.terms.items():
            for beta, q in other.terms.items():
                # d^alpha o (q .) = sum_{gamma <= alpha} C(alpha,gamma) (d^gamma q) d^{alpha-gamma}
                for gamma in itertools.product(*(range(a + 1) for a in alpha)):
                    dq = q.derivative_multi(gamma)
                    if dq.is_zero():
                        continue
                    binom = 1
                    for a, g in zip(alpha, gamma):
                        binom *= math.comb(a, g)
                    rest = tuple(a - g for a, g in zip(alpha, gamma))
                    key = tuple(r + b for r, b in zip(rest, beta))
                    add = p * dq.scale(binom)
                    cur = result.get(key)
                    s = add if cur is None else cur + add
                    if s.is_zero():
                        result.pop(key, None)
                    else:
                        result[key] = s
        return WeylElement(n, result, self.var)

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return self.compose(other)
        return self.scale(other)

    __rmul__ = scale

    def fourier(self) -> "WeylElement":
        """Algebraic Fourier transform: d/dv_i -> -w_i, v_i -> d/dw_i."""
        new_var = DUAL_VAR[self.var]
        n = self.arity
        out = WeylElement.zero(n, new_var)
        for alpha, p in self.terms.items():
            # image of the coefficient: constant-coefficient derivative operator
            dpart = WeylElement(
                n,
                {m: Polynomial.constant(n, c, new_var) for m, c in p.terms.items()},
                new_var,
            )
            # image of d^alpha: multiplication by (-1)^|alpha| w^alpha
            sign = Fraction(-1) ** sum(alpha)
            mpart = WeylElement.from_polynomial(
                Polynomial.monomial(n, alpha, sign, new_var)
            )
            out = out + dpart.compose(mpart)
        return out

    def is_constant_coefficient(self) -> bool:
        return all(p.is_constant() for p in self.terms.values())

    def symbol(self) -> Polynomial:
        """Constant-coefficient operators -> polynomials, d^alpha -> w^alpha."""
        if not self.is_constant_coefficient():
            raise ValueError("symbol requires constant coefficients")
        new_var = DUAL_VAR[self.var]
        terms = {a: p.constant_value() for a, p in self.terms.items()}
        return Polynomial(self.arity, terms, new_var)

    def restrict_last_var(self) -> "WeylElement":
        """Set the last coordinate to 0 in every coefficient.

        Valid as the normal form of Rest o D because coefficients sit to the
        left of all derivatives.
        """
        return WeylElement(
            self.arity,
            {a: p.set_var_zero(self.arity - 1) for a, p in self.terms.items()},
            self.var,
        )

    def pad_vars(self, arity: int) -> "WeylElement":
        pad = (0,) * (arity - self.arity)
        return WeylElement(
            arity,
            {a + pad: p.pad_vars(arity) for a, p in self.terms.items()},
            self.var,
        )

    def find_nonconstant_witness(self, extra_degree: int = 2):
        """A monomial on which this operator acts nonzero, or None if zero."""
        if self.is_zero():
            return None
        cap = self.order() + max(p.degree() for p in self.terms.values()) + extra_degree
        for mono in monomials_up_to(self.arity, cap):
            f = Polynomial.monomial(self.arity, mono, 1, self.var)
            if not self.apply(f).is_zero():
                return mono
        raise AssertionError("nonzero operator acted as zero on the scanned range")

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset((a, hash(p)) for a, p in self.terms.items())))

    def __str__(self):
        """Canonical expanded form: one chunk per coefficient monomial."""
        if not self.terms:
            return "0"
        bits = []
        for alpha, coeff in sorted(
            self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True
        ):
            dstr = format_monomial(alpha, "d")
            for mono, c in coeff.sorted_terms():
                mstr = format_monomial(mono, self.var)
                parts = [p for p in (mstr, dstr) if p]
                if not parts:
                    body = str(abs(c))
                elif abs(c) == 1:
                    body = "*".join(parts)
                else:
                    body = "*".join([str(abs(c))] + parts)
                if not bits:
                    bits.append(body if c > 0 else f"-{body}")
                else:
                    bits.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(bits)

    __repr__ = __str__


def parse_weyl(text: str, arity: int, var: str = "x") -> WeylElement:
    """Inverse of str(): sums of terms `coeff*var-part*d-part`, d rightmost."""
    import re

    text = text.strip()
    if text == "0":
        return WeylElement.zero(arity, var)
    text = text.replace("- ", "-").replace("+ ", "+")
    terms = {}
    for piece in re.split(r"(?=[+-])", text):
        piece = piece.strip()
        if not piece:
            continue
        sign = 1
        if piece[0] == "+":
            piece = piece[1:]
        elif piece[0] == "-":
            sign = -1
            piece = piece[1:]
        if not piece:
            continue
        coeff = Fraction(sign)
        expo = [0] * arity
        alpha = [0] * arity
        for factor in piece.split("*"):
            factor = factor.strip()
            m = re.fullmatch(r"([a-zA-Z]+)(\d+)(?:\^(\d+))?", factor)
            if m and m.group(1) == "d":
                alpha[int(m.group(2)) - 1] += int(m.group(3)) if m.group(3) else 1
            elif m and m.group(1) == var:
                expo[int(m.group(2)) - 1] += int(m.group(3)) if m.group(3) else 1
            else:
                coeff *= Fraction(factor)
        key = tuple(alpha)
        add = Polynomial.monomial(arity, tuple(expo), coeff, var)
        cur = terms.get(key)
        terms[key] = add if cur is None else cur + add
    return WeylElement(arity, {k: v for k, v in terms.items() if not v.is_zero()}, var)


def symb(D: WeylElement) -> Polynomial:
    return D.symbol()


def symb_inverse(p: Polynomial) -> WeylElement:
    """Polynomial in the dual variables -> constant-coefficient operator."""
    new_var = DUAL_VAR[p.var]
    return WeylElement(
        p.arity,
        {m: Polynomial.constant(p.arity, c, new_var) for m, c in p.terms.items()},
        new_var,
    )
