"""
Dense univariate polynomials over GaussRat

Coefficients are stored low to high with no trailing zeros; the zero
polynomial has no coefficients and degree -1. Ring arithmetic is done here;
gcd and factorisation go through sympy over Q(i).
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import sympy

from ratmap.gauss import ONE, ZERO, GaussRat, Scalar

SYMBOL = sympy.Symbol('z')


@dataclass(frozen=True)
class Poly:
    coeffs: Tuple[GaussRat, ...] = ()

    def __post_init__(self):
        coeffs = [GaussRat.of(c) for c in self.coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def zero(cls) -> 'Poly':
        return cls(())

    @classmethod
    def one(cls) -> 'Poly':
        return cls((ONE,))

    @classmethod
    def constant(cls, c: Scalar) -> 'Poly':
        return cls((GaussRat.of(c),))

    @classmethod
    def z(cls) -> 'Poly':
        return cls((ZERO, ONE))

    @classmethod
    def from_terms(cls, terms: Dict[int, Scalar]) -> 'Poly':
        """{exponent: coefficient}; repeated exponents are not possible in a dict"""
        if not terms:
            return cls.zero()
        coeffs = [ZERO] * (max(terms) + 1)
        for exponent, c in terms.items():
            coeffs[exponent] = GaussRat.of(c)
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.degree <= 0

    @property
    def lead(self) -> GaussRat:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> GaussRat:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __add__(self, other: 'Poly') -> 'Poly':
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __neg__(self) -> 'Poly':
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def scale(self, c: Scalar) -> 'Poly':
        c = GaussRat.of(c)
        return Poly(tuple(a * c for a in self.coeffs))

    def __pow__(self, exponent: int) -> 'Poly':
        if exponent < 0:
            raise ValueError('Negative polynomial power')
        result = Poly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __call__(self, x: Scalar) -> GaussRat:
        """Horner evaluation"""
        x = GaussRat.of(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: 'Poly') -> 'Poly':
        """self(inner(z)), Horner style"""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(c)
        return acc

    def derivative(self) -> 'Poly':
        return Poly(tuple(c * k for k, c in enumerate(self.coeffs) if k > 0))

    def conjugate(self) -> 'Poly':
        return Poly(tuple(c.conjugate() for c in self.coeffs))

    def monic(self) -> 'Poly':
        if self.is_zero():
            return self
        return self.scale(self.lead.reciprocal())

    def __divmod__(self, other: 'Poly') -> Tuple['Poly', 'Poly']:
        if other.is_zero():
            raise ZeroDivisionError('Polynomial division by zero')
        remainder = list(self.coeffs)
        quotient = [ZERO] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        inv_lead = other.lead.reciprocal()
        for shift in range(len(quotient) - 1, -1, -1):
            factor = remainder[shift + other.degree] * inv_lead
            quotient[shift] = factor
            if factor.is_zero():
                continue
            for k, c in enumerate(other.coeffs):
                remainder[shift + k] = remainder[shift + k] - factor * c
        return Poly(tuple(quotient)), Poly(tuple(remainder))

    def __floordiv__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[0]

    def __mod__(self, other: 'Poly') -> 'Poly':
        return divmod(self, other)[1]

    def to_sympy(self):
        return sum((c.to_sympy() * SYMBOL ** k for k, c in enumerate(self.coeffs)), sympy.Integer(0))

    @classmethod
    def from_sympy(cls, expr) -> 'Poly':
        expr = sympy.expand(expr)
        if expr == 0:
            return cls.zero()
        coeffs = sympy.Poly(expr, SYMBOL).all_coeffs()
        return cls(tuple(GaussRat.from_sympy(c) for c in reversed(coeffs)))

    def __str__(self) -> str:
        from ratmap.literal import format_poly
        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q(i); gcd(0, 0) is 0"""
    if a.is_zero() and b.is_zero():
        return Poly.zero()
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return Poly.one()
    return Poly.from_sympy(sympy.gcd(a.to_sympy(), b.to_sympy())).monic()


def factor(p: Poly) -> Tuple[List[GaussRat], List[Tuple[Poly, int]]]:
    """
    Exact factorisation over Q(i).

    Returns (roots with multiplicity, [(monic irreducible factor of degree >= 2, multiplicity)]).
    """
    if p.is_zero():
        raise ValueError('Cannot factor the zero polynomial')
    if p.is_constant():
        return [], []
    _, factors = sympy.factor_list(p.to_sympy(), SYMBOL, gaussian=True)
    roots: List[GaussRat] = []
    others: List[Tuple[Poly, int]] = []
    for expr, multiplicity in factors:
        f = Poly.from_sympy(expr).monic()
        if f.degree == 1:
            roots.extend([-f.coeff(0)] * multiplicity)
        elif f.degree >= 2:
            others.append((f, multiplicity))
    return roots, others


def poly_from_roots(roots: Sequence[Scalar]) -> Poly:
    result = Poly.one()
    for r in roots:
        result = result * Poly((-GaussRat.of(r), ONE))
    return result
