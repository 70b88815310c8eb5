"""
Rational maps and Mobius transformations over Q(i)

A RationalMap is a coprime pair num / den with den monic. Constants are
degree-0 maps; the constant infinity is stored as (1 : 0) so that
composition is total.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional

from ratmap.gauss import ONE, ZERO, GaussRat, Scalar
from ratmap.poly import Poly, factor, poly_gcd


def _normalize(num: Poly, den: Poly, reduce: bool):
    if den.is_zero():
        if num.is_zero():
            raise ValueError('0/0 is not a rational map')
        return Poly.one(), Poly.zero()
    if num.is_zero():
        return Poly.zero(), Poly.one()
    if reduce and not num.is_constant() and not den.is_constant():
        g = poly_gcd(num, den)
        if g.degree >= 1:
            num, den = num // g, den // g
    inv_lead = den.lead.reciprocal()
    return num.scale(inv_lead), den.scale(inv_lead)


@dataclass(frozen=True)
class RationalMap:
    num: Poly
    den: Poly

    def __post_init__(self):
        num, den = _normalize(self.num, self.den, reduce=True)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def _coprime(cls, num: Poly, den: Poly) -> 'RationalMap':
        """Build from a pair already known to be coprime, skipping the gcd"""
        result = cls.__new__(cls)
        num, den = _normalize(num, den, reduce=False)
        object.__setattr__(result, 'num', num)
        object.__setattr__(result, 'den', den)
        return result

    @classmethod
    def identity(cls) -> 'RationalMap':
        return cls._coprime(Poly.z(), Poly.one())

    @classmethod
    def constant(cls, c: Scalar) -> 'RationalMap':
        return cls._coprime(Poly.constant(c), Poly.one())

    @classmethod
    def infinity(cls) -> 'RationalMap':
        return cls._coprime(Poly.one(), Poly.zero())

    @classmethod
    def polynomial(cls, p: Poly) -> 'RationalMap':
        return cls._coprime(p, Poly.one())

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def is_constant(self) -> bool:
        return self.degree == 0

    def is_polynomial(self) -> bool:
        return self.den == Poly.one()

    def is_infinity(self) -> bool:
        return self.den.is_zero()

    def __call__(self, x: Scalar) -> Optional[GaussRat]:
        """Value at a finite point; None stands for infinity"""
        d = self.den(x)
        if d.is_zero():
            return None
        return self.num(x) / d

    def conjugate(self) -> 'RationalMap':
        """Coefficientwise complex conjugation"""
        return RationalMap._coprime(self.num.conjugate(), self.den.conjugate())

    def __str__(self) -> str:
        from ratmap.literal import format_rational_map
        return format_rational_map(self)


def compose(outer: RationalMap, inner: RationalMap) -> RationalMap:
    """
    outer(inner(z)) by homogeneous substitution:
    N = sum a_k f^k g^(D-k), M = sum b_k f^k g^(D-k) with D = deg(outer),
    inner = f / g. Coprime inputs give a coprime output, so no gcd is taken.
    """
    top = outer.degree
    f, g = inner.num, inner.den
    f_powers: List[Poly] = [Poly.one()]
    g_powers: List[Poly] = [Poly.one()]
    for _ in range(top):
        f_powers.append(f_powers[-1] * f)
        g_powers.append(g_powers[-1] * g)

    num = Poly.zero()
    den = Poly.zero()
    for k in range(top + 1):
        term = f_powers[k] * g_powers[top - k]
        a, b = outer.num.coeff(k), outer.den.coeff(k)
        if not a.is_zero():
            num = num + term.scale(a)
        if not b.is_zero():
            den = den + term.scale(b)
    return RationalMap._coprime(num, den)


def compose_all(*maps: RationalMap) -> RationalMap:
    """compose_all(a, b, c) == a o b o c"""
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = compose(m, result)
    return result


def sandwich(g1: RationalMap, f: RationalMap, g2: RationalMap) -> RationalMap:
    """g1 *_f g2 = g1 o f o g2"""
    return compose(g1, compose(f, g2))


@dataclass(frozen=True)
class Mobius:
    """
    z -> (a z + b) / (c z + d) with ad - bc != 0, stored projectively:
    scaled so the first non-zero of (c, d) is 1.
    """

    a: GaussRat
    b: GaussRat
    c: GaussRat
    d: GaussRat

    def __post_init__(self):
        a, b, c, d = (GaussRat.of(x) for x in (self.a, self.b, self.c, self.d))
        if (a * d - b * c).is_zero():
            raise ValueError(f'Singular Mobius matrix [[{a}, {b}], [{c}, {d}]]')
        pivot = c if not c.is_zero() else d
        inv = pivot.reciprocal()
        for name, value in zip('abcd', (a, b, c, d)):
            object.__setattr__(self, name, value * inv)

    @classmethod
    def identity(cls) -> 'Mobius':
        return cls(ONE, ZERO, ZERO, ONE)

    def determinant(self) -> GaussRat:
        return self.a * self.d - self.b * self.c

    def compose(self, inner: 'Mobius') -> 'Mobius':
        """self o inner as a matrix product"""
        return Mobius(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        )

    def inverse(self) -> 'Mobius':
        return Mobius(self.d, -self.b, -self.c, self.a)

    def conjugate(self) -> 'Mobius':
        return Mobius(self.a.conjugate(), self.b.conjugate(), self.c.conjugate(), self.d.conjugate())

    def to_rational_map(self) -> RationalMap:
        return RationalMap._coprime(Poly((self.b, self.a)), Poly((self.d, self.c)))

    @classmethod
    def from_rational_map(cls, r: RationalMap) -> 'Mobius':
        if r.degree != 1:
            raise ValueError(f'A Mobius transformation has degree 1, got degree {r.degree} for {r}')
        return cls(r.num.coeff(1), r.num.coeff(0), r.den.coeff(1), r.den.coeff(0))

    def __str__(self) -> str:
        return str(self.to_rational_map())


def critical_point_polynomial(r: RationalMap) -> Poly:
    """Numerator of R': num' den - num den' (den is monic, so this is already normalized)"""
    if r.is_constant():
        raise ValueError(f'Constant map {r} has no critical points')
    return r.num.derivative() * r.den - r.num * r.den.derivative()


def critical_data(r: RationalMap) -> Dict:
    """
    Exact finite critical points plus the count carried by infinity.

    A degree-d map has 2d - 2 critical points on the sphere with multiplicity.
    The finite ones are the roots of the critical polynomial; the rest sit at
    infinity.

    Returns:
        {
            'polynomial': Poly,
            'roots': [GaussRat],            # exact roots over Q(i), with multiplicity
            'irreducible': [(Poly, int)],   # remaining factors with multiplicity
            'finiteCount': int,
            'infinityCount': int,           # 2d - 2 - deg(polynomial)
            'criticalValues': [GaussRat or None]
        }
    """
    poly = critical_point_polynomial(r)
    roots, irreducible = factor(poly)
    return {
        'polynomial': poly,
        'roots': roots,
        'irreducible': irreducible,
        'finiteCount': poly.degree,
        'infinityCount': 2 * r.degree - 2 - poly.degree,
        'criticalValues': [r(x) for x in roots],
    }
