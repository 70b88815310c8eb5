"""
Formal mating of two polynomial constellations of the same degree d

Each side is a polynomial: one entry (the fiber over infinity) is a d-cycle.
The inner side keeps its finite entries; the outer side is mirrored, then
both are relabeled so their infinity cycles glue inversely along the
equator. The result carries the finite entries of both sides and no entry
over the equator, so the equator is unbranched.
"""
from typing import List, Tuple

from monodromy.constellation import (
    Constellation,
    infinity_index,
    require_valid,
    standard_cycle,
    validate,
)
from monodromy.perm import Perm, inverse, product


class MatingError(ValueError):
    """Raised when two constellations cannot be mated"""


def mirror(c: Constellation) -> Constellation:
    """Orientation reversal: reverse the tuple and invert every entry"""
    require_valid(c)
    return c.replace_branches([inverse(b) for b in reversed(c.branches)])


def _polynomial_form(c: Constellation, side: str) -> Tuple[List[Perm], Perm]:
    """(finite entries, infinity entry) after rotating infinity to the end"""
    index = infinity_index(c)
    if index is None:
        raise MatingError(f'{side} constellation {c} has no unique d-cycle entry over infinity')
    rotated = c.branches[index + 1:] + c.branches[:index + 1]
    return list(rotated[:-1]), rotated[-1]


def _standard_position(finite: List[Perm], infinity: Perm) -> List[Perm]:
    """Relabel sheets so the infinity entry becomes (1 2 ... d)"""
    cycle = infinity.cycles()[0]
    mapping = {sheet: position for position, sheet in enumerate(cycle, 1)}
    return [b.relabel(mapping) for b in finite]


def _reflect(perms: List[Perm], degree: int) -> List[Perm]:
    """Relabel by i -> d + 1 - i, which turns (1 2 ... d) into its inverse"""
    mapping = {i: degree + 1 - i for i in range(1, degree + 1)}
    return [b.relabel(mapping) for b in perms]


def formal_mating(inner: Constellation, outer: Constellation) -> Constellation:
    require_valid(inner)
    require_valid(outer)
    if inner.degree != outer.degree:
        raise MatingError(f'Cannot mate degree {inner.degree} with degree {outer.degree}')
    degree = inner.degree
    if degree < 2:
        raise MatingError('Mating needs degree >= 2')

    inner_finite, inner_infinity = _polynomial_form(inner, 'inner')
    outer_finite, outer_infinity = _polynomial_form(outer, 'outer')

    outer_finite = [inverse(b) for b in reversed(outer_finite)]
    outer_infinity = inverse(outer_infinity)

    inner_branches = _standard_position(inner_finite, inner_infinity)
    outer_branches = _reflect(_standard_position(outer_finite, outer_infinity), degree)

    mated = Constellation(degree, tuple(inner_branches + outer_branches))
    report = validate(mated)
    if not report.ok:
        raise MatingError(f'Mated constellation is invalid: {report}')
    return mated


def inner_count(inner: Constellation) -> int:
    """Number of mated entries coming from the inner side"""
    return len(inner.branches) - 1


def equator_monodromy(mated: Constellation, inner_entries: int) -> Perm:
    """Monodromy around the equator: the product of the inner entries"""
    return product(mated.branches[:inner_entries], mated.degree)


def equator_is_unbranched(mated: Constellation, inner_entries: int) -> bool:
    """The equator lifts to one closed curve winding d times"""
    equator = equator_monodromy(mated, inner_entries)
    return equator == inverse(standard_cycle(mated.degree))
