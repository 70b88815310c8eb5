"""
The cubic family f_t(z) = (1 - t) z^2 + t z^3, 0 <= t <= 1

f_0 = z^2 and f_1 = z^3. For 0 < t < 1 the critical points are 0 and
c_t = -2(1 - t)/(3t) with critical values 0 and 4(1 - t)^3 / (27 t^2).
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from monodromy.constellation import Constellation, generic_polynomial, monomial
from ratmap.gauss import GaussRat
from ratmap.poly import Poly
from ratmap.rational_map import RationalMap

Exact = Union[Fraction, GaussRat, int]


@dataclass(frozen=True)
class FtParams:
    t: Fraction

    def __post_init__(self):
        t = Fraction(self.t)
        if not 0 <= t <= 1:
            raise ValueError(f't must lie in [0, 1], got {t}')
        object.__setattr__(self, 't', t)

    @classmethod
    def parse(cls, text: str) -> 'FtParams':
        try:
            return cls(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f'Cannot parse t={text!r} as a fraction')

    def __str__(self) -> str:
        return str(self.t)


def ft_eval(p: FtParams, z: complex) -> complex:
    t = float(p.t)
    return (1 - t) * z * z + t * z * z * z


def ft_eval_exact(p: FtParams, z: Exact) -> Exact:
    return (1 - p.t) * z * z + p.t * z * z * z


def ft_rational_map(p: FtParams) -> RationalMap:
    return RationalMap.polynomial(Poly.from_terms({2: 1 - p.t, 3: p.t}))


def ft_critical_data(p: FtParams) -> Dict:
    """
    Finite critical points and values, exact.

    Returns:
        {
            't': Fraction,
            'points': [Fraction],      # with multiplicity at t = 1
            'values': [Fraction],      # distinct finite critical values
            'degenerate': bool,        # t = 0: the second point has gone to infinity
            'merged': bool             # t = 1: both points at 0
        }
    """
    t = p.t
    if t == 0:
        return {'t': t, 'points': [Fraction(0)], 'values': [Fraction(0)], 'degenerate': True, 'merged': False}
    if t == 1:
        return {'t': t, 'points': [Fraction(0), Fraction(0)], 'values': [Fraction(0)], 'degenerate': False, 'merged': True}
    point = -2 * (1 - t) / (3 * t)
    value = 4 * (1 - t) ** 3 / (27 * t ** 2)
    return {
        't': t,
        'points': [Fraction(0), point],
        'values': [Fraction(0), value],
        'degenerate': False,
        'merged': False,
    }


def ft_in_general_position(p: FtParams) -> bool:
    """Two distinct finite critical values: exactly when 0 < t < 1"""
    return 0 < p.t < 1


def ft_monodromy(p: FtParams) -> Constellation:
    """Monodromy of f_t over the sphere: z^2 at t = 0, z^3 at t = 1, a generic cubic between"""
    if p.t == 0:
        return monomial(2)
    if p.t == 1:
        return monomial(3)
    return generic_polynomial(3)


def escape_radius(p: FtParams) -> float:
    """
    Beyond this radius |f_t(z)| >= 2|z|, so escape is irreversible:
    |f_t(z)| >= |z|^2 (t|z| - (1 - t)) >= 2|z|^2 once |z| >= 3/t.
    """
    if p.t == 0:
        return 2.0
    return max(2.0, 3.0 / float(p.t))


def default_half_width(p: FtParams) -> float:
    """The filled Julia set sits in |z| <= 1/t, so this window shows all of it with margin"""
    if p.t == 0:
        return 2.0
    return max(2.0, 9.0 / (8.0 * float(p.t)))
