"""
Constellations: the monodromy of a single branched covering of the sphere

A constellation of degree d is an ordered tuple of permutations of {1..d},
one per branch point of the target, whose left-to-right product is the
identity and which generates a transitive group (the source is connected).

Riemann-Hurwitz:
    chi(source) = d * chi(target) - sum_i (d - #cycles(sigma_i))
"""
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from monodromy.perm import Perm, compose, cycle_type, inverse, orbit_closure, parse_perm, product

# Violation names reported by validate(), in the order they are checked
VIOLATION_DEGREE = 'degree_mismatch'
VIOLATION_TARGET_GENUS = 'unsupported_target_genus'
VIOLATION_PRODUCT = 'product_not_identity'
VIOLATION_TRANSITIVITY = 'not_transitive'


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(); violation names the first invariant that failed"""

    ok: bool
    violation: Optional[str] = None
    detail: str = ''

    def to_dict(self) -> Dict:
        return {
            'status': 'ok' if self.ok else 'violation',
            'violation': self.violation,
            'detail': self.detail,
        }

    def __str__(self) -> str:
        if self.ok:
            return 'ok'
        return f'violation: {self.violation} ({self.detail})'


class ConstellationError(ValueError):
    """Raised when an operation needs a valid constellation and gets an invalid one"""

    def __init__(self, report: ValidationReport, source: Optional[str] = None):
        self.report = report
        self.source = source
        prefix = f'{source}: ' if source else ''
        super().__init__(f'{prefix}{report}')


@dataclass(frozen=True)
class Passport:
    """Multiset of cycle types, one per tuple entry (stored sorted)"""

    cycle_types: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, 'cycle_types', tuple(sorted(tuple(t) for t in self.cycle_types)))

    def padded(self, extra_fixed: int) -> 'Passport':
        """The same ramification seen on extra_fixed more (unramified) sheets"""
        return Passport(tuple(t + (1,) * extra_fixed for t in self.cycle_types))

    def union(self, other: 'Passport') -> 'Passport':
        return Passport(self.cycle_types + other.cycle_types)

    def __str__(self) -> str:
        return ' '.join('[' + ','.join(str(n) for n in t) + ']' for t in self.cycle_types)


@dataclass(frozen=True)
class Constellation:
    """
    Degree d plus ordered branch permutations.

    Identity entries are dropped on construction: a branch point with trivial
    monodromy is just an extra puncture.
    """

    degree: int
    branches: Tuple[Perm, ...]
    target_genus: int = 0

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f'Constellation degree must be >= 1, got {self.degree}')
        if self.target_genus < 0:
            raise ValueError(f'Target genus must be >= 0, got {self.target_genus}')
        branches = tuple(b for b in self.branches if not b.is_identity())
        object.__setattr__(self, 'branches', branches)

    @classmethod
    def from_cycles(cls, degree: int, entries: Iterable[str], target_genus: int = 0) -> 'Constellation':
        """Convenience builder from cycle-notation strings"""
        return cls(degree, tuple(parse_perm(e, degree) for e in entries), target_genus)

    def __len__(self) -> int:
        return len(self.branches)

    def product(self) -> Perm:
        return product(self.branches, self.degree)

    def passport(self) -> Passport:
        return Passport(tuple(cycle_type(b) for b in self.branches))

    def replace_branches(self, branches: Sequence[Perm]) -> 'Constellation':
        return Constellation(self.degree, tuple(branches), self.target_genus)

    def relabel(self, mapping: Dict[int, int]) -> 'Constellation':
        return self.replace_branches([b.relabel(mapping) for b in self.branches])

    def __str__(self) -> str:
        entries = ', '.join(str(b) for b in self.branches)
        return f'{{d={self.degree}, [{entries}]}}'


def validate(c: Constellation) -> ValidationReport:
    """Check degree coherence, supported target, identity product and transitivity"""
    for index, branch in enumerate(c.branches, 1):
        if branch.degree != c.degree:
            return ValidationReport(
                False, VIOLATION_DEGREE,
                f'branch {index} has degree {branch.degree}, constellation has degree {c.degree}',
            )

    if c.target_genus != 0:
        return ValidationReport(
            False, VIOLATION_TARGET_GENUS,
            f'target genus {c.target_genus} is not supported; only sphere targets are',
        )

    total = c.product()
    if not total.is_identity():
        return ValidationReport(False, VIOLATION_PRODUCT, f'product of branches is {total}')

    orbit = orbit_closure(list(c.branches), 1) if c.branches else {1}
    if len(orbit) != c.degree:
        missing = sorted(set(range(1, c.degree + 1)) - orbit)
        return ValidationReport(
            False, VIOLATION_TRANSITIVITY,
            f'sheets {missing} are not reachable from sheet 1',
        )

    return ValidationReport(True)


def require_valid(c: Constellation) -> Constellation:
    report = validate(c)
    if not report.ok:
        raise ConstellationError(report)
    return c


def ramification(c: Constellation) -> int:
    """Total ramification sum_i (d - #cycles(sigma_i))"""
    return sum(c.degree - b.cycle_count() for b in c.branches)


def euler_characteristic(c: Constellation) -> int:
    require_valid(c)
    return c.degree * (2 - 2 * c.target_genus) - ramification(c)


def genus(c: Constellation) -> int:
    chi = euler_characteristic(c)
    if chi % 2 != 0 or chi > 2:
        # Riemann-Hurwitz parity makes this unreachable for valid data
        raise ValueError(f'Euler characteristic {chi} does not belong to a closed orientable surface')
    return (2 - chi) // 2


def punctures(c: Constellation) -> Tuple[int, int]:
    """
    (source punctures, target punctures) after removing the branch points
    and their preimages.
    """
    return sum(b.cycle_count() for b in c.branches), len(c.branches)


def _is_full_cycle(p: Perm) -> bool:
    return cycle_type(p) == (p.degree,)


def _is_transposition(p: Perm) -> bool:
    return cycle_type(p)[:2] == (2, 1) or cycle_type(p) == (2,)


def infinity_index(c: Constellation) -> Optional[int]:
    """
    Position (0-based) of the fiber over infinity of a polynomial constellation.

    The last entry wins when it is a d-cycle; otherwise the unique d-cycle entry.
    None when there is no such entry or the choice is ambiguous.
    """
    if not c.branches:
        return None
    if _is_full_cycle(c.branches[-1]):
        return len(c.branches) - 1
    candidates = [i for i, b in enumerate(c.branches) if _is_full_cycle(b)]
    if len(candidates) == 1:
        return candidates[0]
    return None


def is_general_position_polynomial(c: Constellation) -> bool:
    """
    True iff the tuple is d - 1 transpositions plus one d-cycle (the fiber
    over infinity): d - 1 distinct finite critical values.
    """
    if c.target_genus != 0 or c.degree < 2 or len(c.branches) != c.degree:
        return False
    if not validate(c).ok:
        return False
    for index, branch in enumerate(c.branches):
        others = c.branches[:index] + c.branches[index + 1:]
        if _is_full_cycle(branch) and all(_is_transposition(b) for b in others):
            return True
    return False


def generic_polynomial(degree: int) -> Constellation:
    """[(1 2), (2 3), ..., (d-1 d), sigma_inf] with sigma_inf closing the product"""
    if degree < 2:
        raise ValueError(f'A general-position polynomial needs degree >= 2, got {degree}')
    finite = [Perm.from_cycles([(i, i + 1)], degree) for i in range(1, degree)]
    closing = inverse(product(finite, degree))
    return Constellation(degree, tuple(finite) + (closing,))


def standard_cycle(degree: int) -> Perm:
    """(1 2 ... d)"""
    return Perm.from_cycles([tuple(range(1, degree + 1))], degree)


def monomial(degree: int) -> Constellation:
    """z^d: one finite critical value (0) and the fiber over infinity"""
    if degree < 1:
        raise ValueError(f'Degree must be >= 1, got {degree}')
    if degree == 1:
        return Constellation(1, ())
    cycle = standard_cycle(degree)
    return Constellation(degree, (cycle, inverse(cycle)))


def chebyshev_polynomial(degree: int) -> Constellation:
    """
    Monodromy of the real Chebyshev polynomial T_d: critical values +-1 with
    zig-zag involutions over them, and a d-cycle over infinity.
    """
    if degree < 2:
        raise ValueError(f'Chebyshev monodromy needs degree >= 2, got {degree}')
    odd_pairs = [(i, i + 1) for i in range(1, degree, 2)]
    even_pairs = [(i, i + 1) for i in range(2, degree, 2)]
    sigma_a = Perm.from_cycles(odd_pairs, degree)
    sigma_b = Perm.from_cycles(even_pairs, degree)
    closing = inverse(compose(sigma_a, sigma_b))
    return Constellation(degree, (sigma_a, sigma_b, closing))
