"""
Connected sums of single branched coverings

R1 # R2 glues the targets along unbranched disks and pulls back. In monodromy
terms the two sheet actions are amalgamated over one shared sheet: left's
sheets become {1..n} with the shared sheet at n, right's sheets become
{n..n+m-1} with its shared sheet also at n. Degrees add minus one.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from monodromy.constellation import (
    Constellation,
    euler_characteristic,
    genus,
    monomial,
    punctures,
    require_valid,
)


@dataclass(frozen=True)
class SumPlan:
    """Which sheet of each side is glued; defaults are (last sheet, first sheet)"""

    left: Constellation
    right: Constellation
    shared_sheet_left: Optional[int] = None
    shared_sheet_right: Optional[int] = None

    def __post_init__(self):
        if self.shared_sheet_left is None:
            object.__setattr__(self, 'shared_sheet_left', self.left.degree)
        if self.shared_sheet_right is None:
            object.__setattr__(self, 'shared_sheet_right', 1)
        if not 1 <= self.shared_sheet_left <= self.left.degree:
            raise ValueError(f'shared_sheet_left {self.shared_sheet_left} out of range 1..{self.left.degree}')
        if not 1 <= self.shared_sheet_right <= self.right.degree:
            raise ValueError(f'shared_sheet_right {self.shared_sheet_right} out of range 1..{self.right.degree}')


def _left_mapping(n: int, shared: int) -> Dict[int, int]:
    others = [s for s in range(1, n + 1) if s != shared]
    mapping = {s: i for i, s in enumerate(others, 1)}
    mapping[shared] = n
    return mapping


def _right_mapping(n: int, m: int, shared: int) -> Dict[int, int]:
    others = [s for s in range(1, m + 1) if s != shared]
    mapping = {s: n + i for i, s in enumerate(others, 1)}
    mapping[shared] = n
    return mapping


def connected_sum(plan: SumPlan) -> Constellation:
    left = require_valid(plan.left)
    right = require_valid(plan.right)
    n, m = left.degree, right.degree
    degree = n + m - 1

    left_map = _left_mapping(n, plan.shared_sheet_left)
    right_map = _right_mapping(n, m, plan.shared_sheet_right)
    branches = [b.extend(degree, left_map) for b in left.branches]
    branches += [b.extend(degree, right_map) for b in right.branches]
    return Constellation(degree, tuple(branches))


def iterated_sum(
    constellations: Sequence[Constellation],
    plans: Optional[Sequence[Tuple[Optional[int], Optional[int]]]] = None,
) -> Constellation:
    """
    Left fold of connected_sum. plans[i] holds the shared sheets for the
    (i + 1)-th gluing; None entries fall back to the SumPlan defaults.
    """
    if len(constellations) < 2:
        raise ValueError(f'An iterated sum needs at least 2 constellations, got {len(constellations)}')
    if plans is not None and len(plans) != len(constellations) - 1:
        raise ValueError(f'Expected {len(constellations) - 1} plans, got {len(plans)}')

    result = constellations[0]
    for index, right in enumerate(constellations[1:]):
        shared_left, shared_right = plans[index] if plans is not None else (None, None)
        result = connected_sum(SumPlan(result, right, shared_left, shared_right))
    return result


def expected_degree(degrees: Sequence[int]) -> int:
    """sum of degrees minus (k - 1) for k summands"""
    return sum(degrees) - (len(degrees) - 1)


def degree_ledger(constellations: Sequence[Constellation], result: Constellation) -> str:
    degrees = [c.degree for c in constellations]
    terms = ' + '.join(str(d) for d in degrees)
    return f'Σdeg − (k−1) = {terms} − ({len(degrees)}−1) = {result.degree}'


def sum_of_quadratics(degree: int) -> Constellation:
    """A degree-d covering in general position as the sum of d - 1 copies of z^2"""
    if degree < 2:
        raise ValueError(f'Degree must be >= 2, got {degree}')
    if degree == 2:
        return monomial(2)
    return iterated_sum([monomial(2)] * (degree - 1))


def genus_report(left: Constellation, right: Constellation, result: Constellation) -> Dict:
    """
    Riemann-Hurwitz bookkeeping for a sum over sphere targets, next to the
    weighted formula m * genus(left) + n * genus(right) (n, m the degrees).

    Only the Euler identity chi(out) = chi(left) + chi(right) - 2 is an
    invariant; the weighted values are reported for comparison.
    """
    n, m = left.degree, right.degree
    chi_left, chi_right, chi_out = (euler_characteristic(c) for c in (left, right, result))
    punctures_left, punctures_right, punctures_out = (punctures(c)[0] for c in (left, right, result))
    weighted_genus = m * genus(left) + n * genus(right)
    weighted_punctures = m * punctures_left + n * punctures_right

    return {
        'chiLeft': chi_left,
        'chiRight': chi_right,
        'chiOut': chi_out,
        'chiExpected': chi_left + chi_right - 2,
        'eulerIdentityHolds': chi_out == chi_left + chi_right - 2,
        'genusOut': genus(result),
        'weightedGenus': weighted_genus,
        'weightedGenusAgrees': weighted_genus == genus(result),
        'puncturesOut': punctures_out,
        'weightedPunctures': weighted_punctures,
    }


def format_genus_report(report: Dict) -> List[str]:
    return [
        f"chi: {report['chiLeft']} + {report['chiRight']} - 2 = {report['chiExpected']} "
        f"(computed {report['chiOut']}, holds={report['eulerIdentityHolds']})",
        f"genus={report['genusOut']} weighted_genus={report['weightedGenus']} "
        f"agrees={report['weightedGenusAgrees']}",
        f"punctures={report['puncturesOut']} weighted_punctures={report['weightedPunctures']}",
    ]
