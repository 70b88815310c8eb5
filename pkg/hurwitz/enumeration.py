"""
Brute-force enumeration of constellations with a given passport.

Used as an oracle for the orbit search at small degree.
"""
from itertools import permutations, product as cartesian
from typing import Dict, List, Sequence, Set, Tuple

from hurwitz.braid import CanonicalForm, canonical
from monodromy.constellation import Constellation, Passport, validate
from monodromy.perm import Perm, cycle_type, inverse, product

MAX_ENUMERATION_DEGREE = 6  # d! permutations per entry


def perms_with_cycle_type(degree: int, shape: Tuple[int, ...]) -> List[Perm]:
    """All permutations of {1..d} with the given (non-increasing, 1s included) cycle type"""
    if degree > MAX_ENUMERATION_DEGREE:
        raise ValueError(f'Enumeration is limited to degree {MAX_ENUMERATION_DEGREE}, got {degree}')
    result = []
    for images in permutations(range(1, degree + 1)):
        p = Perm(images)
        if cycle_type(p) == shape:
            result.append(p)
    return result


def enumerate_constellations(degree: int, passport: Passport) -> List[Constellation]:
    """
    Every valid tuple whose entries realize the passport in some order.
    The last entry of each ordering is forced by the product condition.
    """
    shapes = passport.cycle_types
    if not shapes:
        return [Constellation(degree, ())] if degree == 1 else []
    by_shape: Dict[Tuple[int, ...], List[Perm]] = {
        shape: perms_with_cycle_type(degree, shape) for shape in set(shapes)
    }

    result = []
    for ordering in sorted(set(permutations(shapes))):
        choices = [by_shape[shape] for shape in ordering[:-1]]
        for head in cartesian(*choices):
            closing = inverse(product(head, degree))
            if cycle_type(closing) != ordering[-1]:
                continue
            c = Constellation(degree, tuple(head) + (closing,))
            if validate(c).ok:
                result.append(c)
    return result


def canonical_forms(constellations: Sequence[Constellation]) -> Set[CanonicalForm]:
    return {canonical(c) for c in constellations}


def generic_polynomial_passport(degree: int) -> Passport:
    """d - 1 simple critical values plus a d-cycle over infinity"""
    transposition = (2,) + (1,) * (degree - 2)
    return Passport((transposition,) * (degree - 1) + ((degree,),))
