"""
Sandwich semigroups of rational maps and their isomorphisms

For a fixed R1 the sandwich product R *_R1 Q = R o R1 o Q makes the rational
maps a semigroup. Given Mobius h, g the map rho(R) = h^-1 o R o g carries
*_R1 onto *_R2 with R2 = g^-1 o R1 o h. With conjugate=True every R is first
replaced by its coefficientwise complex conjugate (orientation reversing
isomorphisms) and R2 = g^-1 o conj(R1) o h.
"""
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from ratmap.gauss import GaussRat
from ratmap.poly import Poly
from ratmap.rational_map import Mobius, RationalMap, compose, compose_all, sandwich

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 100
DEFAULT_SEED = 7
DEFAULT_MAX_DEGREE = 3
DEFAULT_HEIGHT = 8  # numerators and denominators of coefficient parts


def _maybe_conjugate(r: RationalMap, conjugate: bool) -> RationalMap:
    return r.conjugate() if conjugate else r


def rho(h: Mobius, g: Mobius, r: RationalMap, conjugate: bool = False) -> RationalMap:
    """h^-1 o R o g (R conjugated first when asked)"""
    return compose_all(h.inverse().to_rational_map(), _maybe_conjugate(r, conjugate), g.to_rational_map())


def rho_inverse(h: Mobius, g: Mobius, r: RationalMap, conjugate: bool = False) -> RationalMap:
    result = compose_all(h.to_rational_map(), r, g.inverse().to_rational_map())
    return _maybe_conjugate(result, conjugate)


def matching_r2(r1: RationalMap, h: Mobius, g: Mobius, conjugate: bool = False) -> RationalMap:
    """The R2 making rho a sandwich isomorphism: g^-1 o R1 o h"""
    return compose_all(g.inverse().to_rational_map(), _maybe_conjugate(r1, conjugate), h.to_rational_map())


def random_poly(rng: random.Random, degree: int, height: int) -> Poly:
    """Exactly the given degree: the leading coefficient is drawn non-zero"""
    coeffs = [GaussRat.random(rng, height) for _ in range(degree)]
    lead = GaussRat.random(rng, height)
    while lead.is_zero():
        lead = GaussRat.random(rng, height)
    return Poly(tuple(coeffs) + (lead,))


def random_rational_map(rng: random.Random, max_degree: int, height: int) -> RationalMap:
    num = random_poly(rng, rng.randint(0, max_degree), height)
    den = random_poly(rng, rng.randint(0, max_degree), height)
    return RationalMap(num, den)


def random_mobius(rng: random.Random, height: int) -> Mobius:
    while True:
        a, b, c, d = (GaussRat.random(rng, height) for _ in range(4))
        if not (a * d - b * c).is_zero():
            return Mobius(a, b, c, d)


def random_samples(
    rng: random.Random, count: int, max_degree: int = DEFAULT_MAX_DEGREE, height: int = DEFAULT_HEIGHT
) -> List[Tuple[RationalMap, RationalMap]]:
    return [
        (random_rational_map(rng, max_degree, height), random_rational_map(rng, max_degree, height))
        for _ in range(count)
    ]


def _failure(index: int, identity: str, r: RationalMap, q: RationalMap, lhs, rhs) -> Dict:
    return {
        'sample': index,
        'identity': identity,
        'R': str(r),
        'Q': str(q),
        'lhs': str(lhs),
        'rhs': str(rhs),
    }


def _check_sample(
    index: int,
    r: RationalMap,
    q: RationalMap,
    r1: RationalMap,
    r2: RationalMap,
    h: Mobius,
    g: Mobius,
    conjugate: bool,
) -> List[Dict]:
    failures = []
    rho_r = rho(h, g, r, conjugate)
    rho_q = rho(h, g, q, conjugate)

    lhs = rho(h, g, sandwich(r, r1, q), conjugate)
    rhs = sandwich(rho_r, r2, rho_q)
    if lhs != rhs:
        failures.append(_failure(index, 'rho(R *_R1 Q) = rho(R) *_R2 rho(Q)', r, q, lhs, rhs))

    left_degree = compose(r, r1).degree
    right_degree = compose(rho_r, r2).degree
    if left_degree != right_degree:
        failures.append(_failure(index, 'deg(R o R1) = deg(rho(R) o R2)', r, q, left_degree, right_degree))

    left_degree = compose(r, r2).degree
    right_degree = compose(rho_inverse(h, g, r, conjugate), r1).degree
    if left_degree != right_degree:
        failures.append(_failure(index, 'deg(R o R2) = deg(rho^-1(R) o R1)', r, q, left_degree, right_degree))

    if r.is_constant() != rho_r.is_constant():
        failures.append(_failure(index, 'rho maps constants to constants', r, q, r.degree, rho_r.degree))

    # rho(R) = phi o R o phi^-1 o gamma with phi = h^-1, gamma = rho(Id)
    phi = h.inverse().to_rational_map()
    phi_inverse = h.to_rational_map()
    gamma = compose(h.inverse().to_rational_map(), g.to_rational_map())
    recovered = compose_all(phi, _maybe_conjugate(r, conjugate), phi_inverse, gamma)
    if recovered != rho_r:
        failures.append(_failure(index, 'rho(R) = phi o R o phi^-1 o gamma', r, q, rho_r, recovered))
    return failures


def verify_sandwich_isomorphism(
    r1: RationalMap,
    h: Mobius,
    g: Mobius,
    samples: Sequence[Tuple[RationalMap, RationalMap]],
    r2: Optional[RationalMap] = None,
    conjugate: bool = False,
    threads: int = 1,
) -> Dict:
    """
    Check the sandwich isomorphism identities exactly on every sample pair.
    r2 defaults to the matching g^-1 o R1 o h; pass another to see it fail.

    Returns:
        {
            'status': 'ok' | 'failed',
            'samples': int,
            'r2': str,
            'corollary': None | bool,   # checked when rho(Id) = Id, i.e. h == g
            'failures': [{'sample', 'identity', 'R', 'Q', 'lhs', 'rhs'}],
            'message': str
        }
    """
    if r1.is_constant():
        raise ValueError(f'R1 must be non-constant, got {r1}')
    if r2 is None:
        r2 = matching_r2(r1, h, g, conjugate)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            per_sample = list(executor.map(
                lambda item: _check_sample(item[0], *item[1], r1, r2, h, g, conjugate),
                enumerate(samples),
            ))
    else:
        per_sample = [_check_sample(i, r, q, r1, r2, h, g, conjugate) for i, (r, q) in enumerate(samples)]
    failures = [failure for sample_failures in per_sample for failure in sample_failures]

    corollary = None
    if h == g:
        f = h.inverse().to_rational_map()
        f_inverse = h.to_rational_map()
        corollary = rho(h, g, r1, conjugate) == r2 and all(
            rho(h, g, r, conjugate) == compose_all(f, _maybe_conjugate(r, conjugate), f_inverse)
            for r, _ in samples
        )
        if not corollary:
            logger.warning('Corollary form rho(R) = f o R o f^-1 failed for h == g')

    ok = not failures and corollary is not False
    if ok:
        message = f'all identities hold (n={len(samples)})'
    elif failures:
        first = failures[0]
        message = (
            f"counterexample at sample {first['sample']}: {first['identity']} fails for "
            f"R = {first['R']}, Q = {first['Q']}: {first['lhs']} != {first['rhs']}"
        )
    else:
        message = 'corollary form rho(R) = f o R o f^-1 fails'

    logger.info('Sandwich verification: %d samples, %d failures', len(samples), len(failures))
    return {
        'status': 'ok' if ok else 'failed',
        'samples': len(samples),
        'r2': str(r2),
        'corollary': corollary,
        'failures': failures,
        'message': message,
    }


def random_instance(rng: random.Random, max_degree: int, height: int) -> Tuple[RationalMap, Mobius, Mobius]:
    """A non-constant R1 and two Mobius maps h, g"""
    r1 = random_rational_map(rng, max_degree, height)
    while r1.is_constant():
        r1 = random_rational_map(rng, max_degree, height)
    return r1, random_mobius(rng, height), random_mobius(rng, height)


def verify_random_instances(
    rng: random.Random,
    instances: int,
    samples_per_instance: int = 2,
    max_degree: int = 2,
    height: int = 4,
    conjugate_share: float = 0.3,
    threads: int = 1,
) -> Dict:
    """
    Run the isomorphism check on randomly drawn (R1, h, g) triples; about
    conjugate_share of them use the orientation reversing variant.

    Returns:
        {
            'status': 'ok' | 'failed',
            'instances': int,
            'conjugateInstances': int,
            'failedInstances': [int],
            'message': str
        }
    """
    if instances < 1:
        raise ValueError(f'instances must be positive, got {instances}')
    failed = []
    conjugate_count = 0
    for index in range(instances):
        conjugate = rng.random() < conjugate_share
        conjugate_count += conjugate
        r1, h, g = random_instance(rng, max_degree, height)
        samples = random_samples(rng, samples_per_instance, max_degree, height)
        report = verify_sandwich_isomorphism(r1, h, g, samples, conjugate=conjugate, threads=threads)
        if report['status'] != 'ok':
            logger.warning('Instance %d failed: %s', index, report['message'])
            failed.append(index)

    if failed:
        message = f'{len(failed)} of {instances} instances failed, first at instance {failed[0]}'
    else:
        message = f'all instances hold (n={instances}, conjugate={conjugate_count})'
    return {
        'status': 'failed' if failed else 'ok',
        'instances': instances,
        'conjugateInstances': conjugate_count,
        'failedInstances': failed,
        'message': message,
    }
