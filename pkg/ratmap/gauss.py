"""
Gaussian rationals Q(i)
"""
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import sympy

Scalar = Union['GaussRat', Fraction, int]


def _fraction_text(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def _sympy_to_fraction(value) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@dataclass(frozen=True)
class GaussRat:
    """re + im * i with exact Fraction parts (lowest terms, positive denominators)"""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    @classmethod
    def of(cls, value: Scalar) -> 'GaussRat':
        if isinstance(value, GaussRat):
            return value
        return cls(Fraction(value))

    @classmethod
    def i(cls) -> 'GaussRat':
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def random(cls, rng: random.Random, height: int, gaussian: bool = True) -> 'GaussRat':
        """Numerators in [-height, height], denominators in [1, height]"""
        re = Fraction(rng.randint(-height, height), rng.randint(1, height))
        im = Fraction(rng.randint(-height, height), rng.randint(1, height)) if gaussian else Fraction(0)
        return cls(re, im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: Scalar) -> 'GaussRat':
        other = GaussRat.of(other)
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> 'GaussRat':
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> 'GaussRat':
        return self + (-GaussRat.of(other))

    def __rsub__(self, other: Scalar) -> 'GaussRat':
        return GaussRat.of(other) - self

    def __mul__(self, other: Scalar) -> 'GaussRat':
        other = GaussRat.of(other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> 'GaussRat':
        return GaussRat(self.re, -self.im)

    def reciprocal(self) -> 'GaussRat':
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError('GaussRat division by zero')
        return GaussRat(self.re / n, -self.im / n)

    def __truediv__(self, other: Scalar) -> 'GaussRat':
        return self * GaussRat.of(other).reciprocal()

    def __rtruediv__(self, other: Scalar) -> 'GaussRat':
        return GaussRat.of(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> 'GaussRat':
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = GaussRat(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_sympy(self):
        return sympy.Rational(self.re.numerator, self.re.denominator) + sympy.I * sympy.Rational(
            self.im.numerator, self.im.denominator
        )

    @classmethod
    def from_sympy(cls, value) -> 'GaussRat':
        re, im = sympy.sympify(value).as_real_imag()
        return cls(_sympy_to_fraction(re), _sympy_to_fraction(im))

    def __str__(self) -> str:
        if self.im == 0:
            return _fraction_text(self.re)
        if self.re == 0:
            return f'{_fraction_text(self.im)}i'
        sign = '-' if self.im < 0 else '+'
        return f'({_fraction_text(self.re)}{sign}{_fraction_text(abs(self.im))}i)'

    def __repr__(self) -> str:
        return f'GaussRat({self})'


ZERO = GaussRat()
ONE = GaussRat(Fraction(1))
