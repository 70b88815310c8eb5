"""
Rational map literals

    (c_k z^k + ... + c_0) / (d_j z^j + ... + d_0)

Coefficients are Gaussian rationals written 3, -1/2, 2i, 1/3i or
(1/2+3/4i). A coefficient of 1 is left out in front of z. A map whose
denominator is 1 is printed as its numerator alone. The printer always emits
the normalized form, and parsing the printed text gives back the same map.
"""
import re
from fractions import Fraction
from typing import List, Tuple

from ratmap.gauss import ONE, GaussRat
from ratmap.poly import Poly
from ratmap.rational_map import Mobius, RationalMap

FRACTION = r'\d+(?:/\d+)?'
REAL_PATTERN = re.compile(rf'^({FRACTION})$')
IMAG_PATTERN = re.compile(rf'^({FRACTION})?i$')
COMPLEX_PATTERN = re.compile(rf'^([+-]?{FRACTION})([+-])({FRACTION})?i$')
VARIABLE_PATTERN = re.compile(r'^z(?:\^(\d+))?$')


class RationalMapFormatError(ValueError):
    """Malformed rational map literal"""


def _fraction(text: str) -> Fraction:
    return Fraction(text)


def parse_coefficient(text: str) -> GaussRat:
    """Unsigned coefficient: 3/4, 2i, i, or a parenthesized (a+bi)"""
    text = text.replace(' ', '')
    if text.startswith('(') and text.endswith(')'):
        inner = text[1:-1]
        match = COMPLEX_PATTERN.match(inner)
        if match:
            im = _fraction(match.group(3)) if match.group(3) else Fraction(1)
            if match.group(2) == '-':
                im = -im
            return GaussRat(_fraction(match.group(1)), im)
        sign = -1 if inner.startswith('-') else 1
        return parse_coefficient(inner.lstrip('+-')) * sign
    match = REAL_PATTERN.match(text)
    if match:
        return GaussRat(_fraction(match.group(1)))
    match = IMAG_PATTERN.match(text)
    if match:
        return GaussRat(Fraction(0), _fraction(match.group(1)) if match.group(1) else Fraction(1))
    raise RationalMapFormatError(f'Cannot parse coefficient {text!r}')


def _split_terms(text: str) -> List[Tuple[int, str]]:
    """Split at top-level + and - into (sign, term) pairs"""
    terms = []
    depth = 0
    sign = 1
    current = ''
    for ch in text:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise RationalMapFormatError(f'Unbalanced parentheses in {text!r}')
        if depth == 0 and ch in '+-':
            if current.strip():
                terms.append((sign, current.strip()))
            elif terms or sign == -1:
                raise RationalMapFormatError(f'Dangling sign in {text!r}')
            sign = 1 if ch == '+' else -1
            current = ''
            continue
        current += ch
    if depth != 0:
        raise RationalMapFormatError(f'Unbalanced parentheses in {text!r}')
    if not current.strip():
        raise RationalMapFormatError(f'Missing term in {text!r}')
    terms.append((sign, current.strip()))
    return terms


def _parse_term(text: str) -> Tuple[int, GaussRat]:
    """'c z^k', 'c z', 'z^k' or 'c'"""
    parts = text.split()
    if len(parts) == 1 and 'z' in parts[0] and not parts[0].startswith('('):
        coefficient_text, variable = '', parts[0]
        if not variable.startswith('z'):
            # written without a space, e.g. 2z^3
            index = variable.index('z')
            coefficient_text, variable = variable[:index], variable[index:]
    elif len(parts) == 1:
        return 0, parse_coefficient(parts[0])
    else:
        coefficient_text, variable = ''.join(parts[:-1]), parts[-1]

    match = VARIABLE_PATTERN.match(variable)
    if not match:
        raise RationalMapFormatError(f'Cannot parse term {text!r}')
    exponent = int(match.group(1)) if match.group(1) else 1
    coefficient = parse_coefficient(coefficient_text) if coefficient_text else ONE
    return exponent, coefficient


def parse_poly(text: str) -> Poly:
    text = text.strip()
    if not text:
        raise RationalMapFormatError('Empty polynomial')
    terms = {}
    for sign, term in _split_terms(text):
        exponent, coefficient = _parse_term(term)
        terms[exponent] = terms.get(exponent, GaussRat()) + coefficient * sign
    return Poly.from_terms(terms)


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for index in range(start, len(text)):
        if text[index] == '(':
            depth += 1
        elif text[index] == ')':
            depth -= 1
            if depth == 0:
                return index
    raise RationalMapFormatError(f'Unbalanced parentheses in {text!r}')


def parse_rational_map(text: str) -> RationalMap:
    """Parse '(num) / (den)', '(num)' or a bare polynomial"""
    text = text.strip()
    if text.startswith('('):
        close = _matching_paren(text, 0)
        rest = text[close + 1:].lstrip()
        if not rest:
            return RationalMap(parse_poly(text[1:close]), Poly.one())
        if rest.startswith('/'):
            den_text = rest[1:].strip()
            if not (den_text.startswith('(') and _matching_paren(den_text, 0) == len(den_text) - 1):
                raise RationalMapFormatError(f'Denominator must be parenthesized in {text!r}')
            num, den = parse_poly(text[1:close]), parse_poly(den_text[1:-1])
            try:
                return RationalMap(num, den)
            except ValueError as e:
                raise RationalMapFormatError(str(e))
    return RationalMap(parse_poly(text), Poly.one())


def parse_mobius(text: str) -> Mobius:
    try:
        return Mobius.from_rational_map(parse_rational_map(text))
    except RationalMapFormatError:
        raise
    except ValueError as e:
        raise RationalMapFormatError(str(e))


def _is_negative(c: GaussRat) -> bool:
    return (c.is_real() and c.re < 0) or (c.re == 0 and c.im < 0)


def format_poly(p: Poly) -> str:
    if p.is_zero():
        return '0'
    pieces = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c.is_zero():
            continue
        negative = _is_negative(c)
        magnitude = -c if negative else c
        if k == 0:
            body = str(magnitude)
        else:
            variable = 'z' if k == 1 else f'z^{k}'
            body = variable if magnitude == ONE else f'{magnitude} {variable}'
        if not pieces:
            pieces.append(f'- {body}' if negative else body)
        else:
            pieces.append(f'{"-" if negative else "+"} {body}')
    return ' '.join(pieces)


def format_rational_map(r: RationalMap) -> str:
    if r.is_infinity():
        return '(1) / (0)'
    if r.is_polynomial():
        return format_poly(r.num)
    return f'({format_poly(r.num)}) / ({format_poly(r.den)})'
