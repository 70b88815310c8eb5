"""
Hurwitz orbit search

The orbit of a constellation is the closure of its canonical form under braid
moves and their inverses. The search is level-synchronous BFS: a frontier is
expanded (optionally on a thread pool), then merged into the seen set in
frontier order, so the result never depends on scheduling.
"""
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, List, Optional

from hurwitz.braid import CanonicalForm, braid_move, canonical, inverse_braid_move
from monodromy.collection import CoveringCollection
from monodromy.constellation import Constellation, require_valid
from surgery.mating import mirror

logger = logging.getLogger(__name__)

DEFAULT_MAX_STATES = 1_000_000  # d <= 5 generic polynomial orbits fit comfortably


def _default_max_states() -> int:
    return int(os.getenv('COVERING_FORGE_MAX_STATES', str(DEFAULT_MAX_STATES)))


@dataclass(frozen=True)
class OrbitBudget:
    """Caps on the search; max_depth None means unlimited"""

    max_states: int = field(default_factory=_default_max_states)
    max_depth: Optional[int] = None

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError(f'max_states must be positive, got {self.max_states}')
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError(f'max_depth must be positive, got {self.max_depth}')


class Verdict(Enum):
    YES = 'yes'
    NO = 'no'
    INCONCLUSIVE = 'inconclusive'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OrbitResult:
    """
    forms: canonical forms reached.
    exhausted: the full closure was computed (no cap hit, no early stop).
    found: the search target was reached, when one was given.
    """

    forms: FrozenSet[CanonicalForm]
    exhausted: bool
    depth: int
    found: bool = False

    def __len__(self) -> int:
        return len(self.forms)

    def __contains__(self, form: CanonicalForm) -> bool:
        return form in self.forms

    def sorted_forms(self) -> List[CanonicalForm]:
        return sorted(self.forms)


def _neighbours(form: CanonicalForm) -> List[CanonicalForm]:
    c = form.to_constellation()
    result = []
    for i in range(1, len(c.branches)):
        result.append(canonical(braid_move(c, i)))
        result.append(canonical(inverse_braid_move(c, i)))
    return result


def hurwitz_orbit(
    c: Constellation,
    budget: Optional[OrbitBudget] = None,
    threads: int = 1,
    target: Optional[CanonicalForm] = None,
) -> OrbitResult:
    """
    BFS closure of canonical(c). With a target the search stops as soon as
    the target is reached; the result is then not exhausted.
    """
    require_valid(c)
    budget = budget or OrbitBudget()
    start = canonical(c)
    seen = {start}
    if target is not None and start == target:
        return OrbitResult(frozenset(seen), False, 0, found=True)

    frontier = [start]
    depth = 0
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while frontier:
            if budget.max_depth is not None and depth >= budget.max_depth:
                logger.warning('Orbit search stopped at depth cap %d with %d states', depth, len(seen))
                return OrbitResult(frozenset(seen), False, depth)

            if executor is not None:
                expansions = list(executor.map(_neighbours, frontier))
            else:
                expansions = [_neighbours(form) for form in frontier]

            next_frontier = []
            for neighbours in expansions:
                for form in neighbours:
                    if form in seen:
                        continue
                    if len(seen) >= budget.max_states:
                        logger.warning('Orbit search stopped at state cap %d', budget.max_states)
                        return OrbitResult(frozenset(seen), False, depth)
                    seen.add(form)
                    next_frontier.append(form)
                    if target is not None and form == target:
                        return OrbitResult(frozenset(seen), False, depth + 1, found=True)

            depth += 1
            frontier = next_frontier
            logger.info('Orbit level %d: %d new states, %d total', depth, len(frontier), len(seen))
    finally:
        if executor is not None:
            executor.shutdown()

    return OrbitResult(frozenset(seen), True, depth)


def certified_different(a: Constellation, b: Constellation) -> bool:
    """Braid moves and relabeling keep degree, target and passport; a mismatch is a certified no"""
    return (
        a.degree != b.degree
        or a.target_genus != b.target_genus
        or a.passport() != b.passport()
    )


def same_hurwitz_class(
    a: Constellation,
    b: Constellation,
    budget: Optional[OrbitBudget] = None,
    threads: int = 1,
) -> Verdict:
    require_valid(a)
    require_valid(b)
    if certified_different(a, b):
        return Verdict.NO
    target = canonical(b)
    if canonical(a) == target:
        return Verdict.YES

    result = hurwitz_orbit(a, budget, threads, target=target)
    if result.found:
        return Verdict.YES
    if result.exhausted:
        return Verdict.NO
    return Verdict.INCONCLUSIVE


def is_symmetric(c: Constellation, budget: Optional[OrbitBudget] = None, threads: int = 1) -> Verdict:
    """Does the Hurwitz class contain the mirrored (anticonformal) copy of c"""
    return same_hurwitz_class(c, mirror(c), budget, threads)


def match_collections(
    left: CoveringCollection,
    right: CoveringCollection,
    budget: Optional[OrbitBudget] = None,
    threads: int = 1,
) -> Dict:
    """
    Greedy component matching by certified Hurwitz class. Each left component
    takes the first unused right component answering yes. The matching is
    reported as found; it is not claimed to be canonical.

    Returns:
        {
            'status': 'matched' | 'unmatched' | 'inconclusive',
            'pairs': [{'left': label, 'right': label}],
            'unmatchedLeft': [label],
            'unmatchedRight': [label]
        }
    """
    used = set()
    pairs = []
    unmatched_left = []
    saw_inconclusive = False

    for component in left.components:
        partner = None
        for candidate in right.components:
            if candidate.label in used:
                continue
            verdict = same_hurwitz_class(component.constellation, candidate.constellation, budget, threads)
            if verdict is Verdict.YES:
                partner = candidate
                break
            if verdict is Verdict.INCONCLUSIVE:
                saw_inconclusive = True
        if partner is None:
            unmatched_left.append(component.label)
        else:
            used.add(partner.label)
            pairs.append({'left': component.label, 'right': partner.label})

    unmatched_right = [c.label for c in right.components if c.label not in used]
    if not unmatched_left and not unmatched_right:
        status = 'matched'
    elif saw_inconclusive:
        status = 'inconclusive'
    else:
        status = 'unmatched'

    return {
        'status': status,
        'pairs': pairs,
        'unmatchedLeft': unmatched_left,
        'unmatchedRight': unmatched_right,
    }
