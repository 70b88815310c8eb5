"""
Exact permutation algebra on the sheets {1..d} of a branched covering

Convention (fixed for the whole project): compose(a, b) applies a first, then b,
so compose(a, b)(i) == b(a(i)). Products of tuples are read left to right.

Points are 1-based everywhere a user can see them. Cycle notation is
"(1 2)(3 4 5)" with whitespace-separated points; the identity on d points is
printed "id[d]".
"""
import re
from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

IDENTITY_PATTERN = re.compile(r'^id\[(\d+)\]$')
CYCLE_PATTERN = re.compile(r'\(([^()]*)\)')


class DegreeMismatchError(ValueError):
    """Raised when permutations of different degrees are combined"""


@dataclass(frozen=True)
class Perm:
    """A bijection of {1..d}; images[i - 1] is the image of point i"""

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise ValueError('A permutation needs degree d >= 1')
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f'Images {list(images)} are not a bijection of 1..{len(images)}')
        object.__setattr__(self, 'images', images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> 'Perm':
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> 'Perm':
        """Build from disjoint cycles given with 1-based points"""
        images = list(range(1, degree + 1))
        seen: Set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 1 or point > degree:
                    raise ValueError(f'Point {point} out of range 1..{degree}')
                if point in seen:
                    raise ValueError(f'Point {point} appears twice in cycle notation')
                seen.add(point)
            for position, point in enumerate(cycle):
                images[point - 1] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: 'Perm') -> 'Perm':
        return compose(self, other)

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f'Perm({format_perm(self)!r}, degree={self.degree})'

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, 1))

    def inverse(self) -> 'Perm':
        return inverse(self)

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest point, ordered by that point"""
        seen: Set[int] = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        return cycle_type(self)

    def cycle_count(self) -> int:
        return len(self.cycles(include_fixed=True))

    def relabel(self, mapping: Dict[int, int]) -> 'Perm':
        """
        Transport along a sheet relabeling old -> new.

        The result p' satisfies p'(mapping[i]) == mapping[p(i)].
        """
        images = [0] * len(mapping)
        for point, image in enumerate(self.images, 1):
            images[mapping[point] - 1] = mapping[image]
        return Perm(tuple(images))

    def conjugate(self, by: 'Perm') -> 'Perm':
        """by^-1 * self * by, i.e. self transported along the relabeling `by`"""
        return compose(compose(inverse(by), self), by)

    def extend(self, degree: int, mapping: Optional[Dict[int, int]] = None) -> 'Perm':
        """
        Push into a larger degree along an injective sheet map (identity by
        default); sheets outside its image stay fixed.
        """
        if mapping is None:
            mapping = {point: point for point in range(1, self.degree + 1)}
        if len(mapping) != self.degree or not all(1 <= s <= degree for s in mapping.values()):
            raise DegreeMismatchError(f'Cannot embed degree {self.degree} into degree {degree}')
        images = list(range(1, degree + 1))
        for point, image in enumerate(self.images, 1):
            images[mapping[point] - 1] = mapping[image]
        return Perm(tuple(images))


def _check_same_degree(perms: Sequence[Perm]) -> None:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise DegreeMismatchError(f'Permutations have mixed degrees {sorted(degrees)}')


def compose(a: Perm, b: Perm) -> Perm:
    """Apply a then b"""
    if a.degree != b.degree:
        raise DegreeMismatchError(f'Cannot compose degree {a.degree} with degree {b.degree}')
    return Perm(tuple(b(a(point)) for point in range(1, a.degree + 1)))


def product(perms: Sequence[Perm], degree: int) -> Perm:
    """Left-to-right product of a tuple; the empty product is id[degree]"""
    return reduce(compose, perms, Perm.identity(degree))


def inverse(a: Perm) -> Perm:
    images = [0] * a.degree
    for point, image in enumerate(a.images, 1):
        images[image - 1] = point
    return Perm(tuple(images))


def cycle_type(a: Perm) -> Tuple[int, ...]:
    """Cycle lengths, fixed points included, as a non-increasing tuple"""
    return tuple(sorted((len(c) for c in a.cycles(include_fixed=True)), reverse=True))


def orbit_closure(gens: Sequence[Perm], start: int) -> Set[int]:
    """Orbit of start under the group generated by gens (BFS)"""
    _check_same_degree(gens)
    if gens and not 1 <= start <= gens[0].degree:
        raise ValueError(f'Start point {start} out of range 1..{gens[0].degree}')
    orbit = {start}
    queue = deque([start])
    while queue:
        point = queue.popleft()
        for g in gens:
            image = g(point)
            if image not in orbit:
                orbit.add(image)
                queue.append(image)
    return orbit


def format_perm(a: Perm) -> str:
    if a.is_identity():
        return f'id[{a.degree}]'
    return ''.join('(' + ' '.join(str(p) for p in cycle) + ')' for cycle in a.cycles())


def parse_perm(text: str, degree: Optional[int] = None) -> Perm:
    """
    Parse cycle notation.

    When degree is None it is inferred as the largest point mentioned, so
    permutations fixing the top sheets need an explicit degree to round-trip.
    """
    text = text.strip()
    identity_match = IDENTITY_PATTERN.match(text)
    if identity_match:
        d = int(identity_match.group(1))
        if degree is not None and d != degree:
            raise DegreeMismatchError(f'Identity id[{d}] given where degree {degree} expected')
        return Perm.identity(d)

    cycles = []
    position = 0
    for match in CYCLE_PATTERN.finditer(text):
        if text[position:match.start()].strip():
            raise ValueError(f'Unexpected text {text[position:match.start()]!r} in cycle notation')
        position = match.end()
        tokens = match.group(1).split()
        if not tokens:
            raise ValueError('Empty cycle in cycle notation')
        try:
            cycles.append(tuple(int(token) for token in tokens))
        except ValueError:
            raise ValueError(f'Non-integer point in cycle ({match.group(1)})')
    if text[position:].strip() or not cycles:
        raise ValueError(f'Cannot parse {text!r} as cycle notation')

    largest = max(max(cycle) for cycle in cycles)
    if degree is None:
        degree = largest
    return Perm.from_cycles(cycles, degree)
