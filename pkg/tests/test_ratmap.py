import random
from fractions import Fraction

import pytest

from ratmap.gauss import GaussRat
from ratmap.literal import (
    RationalMapFormatError,
    format_rational_map,
    parse_mobius,
    parse_poly,
    parse_rational_map,
)
from ratmap.poly import Poly, factor, poly_from_roots, poly_gcd
from ratmap.rational_map import (
    Mobius,
    RationalMap,
    compose,
    compose_all,
    critical_data,
    critical_point_polynomial,
    sandwich,
)
from ratmap.sandwich import (
    matching_r2,
    random_mobius,
    random_rational_map,
    random_samples,
    rho,
    verify_random_instances,
    verify_sandwich_isomorphism,
)


def rm(text):
    return parse_rational_map(text)


def test_compose_polynomials():
    assert compose(rm('z^2'), rm('z + 1')) == rm('z^2 + 2 z + 1')
    assert compose(rm('z + 1'), rm('z^2')) == rm('z^2 + 1')


def test_compose_with_reciprocal():
    result = compose(rm('z^2'), rm('(1) / (z)'))
    assert result == rm('(1) / (z^2)')
    assert result.degree == 2


def test_compose_with_infinity():
    infinity = RationalMap.infinity()
    assert compose(rm('z^2'), infinity).is_infinity()
    assert compose(rm('(1) / (z)'), infinity) == RationalMap.constant(0)
    assert compose(infinity, rm('z^3')).is_infinity()


def test_sandwich_product():
    assert sandwich(rm('z + 1'), rm('z^2'), rm('2 z')) == rm('4 z^2 + 1')
    f = rm('z^3 + z')
    identity = RationalMap.identity()
    assert sandwich(identity, f, identity) == f


def test_sandwich_is_associative():
    rng = random.Random(3)
    f = rm('(z^2 + 1) / (z - 2)')
    for a, b in random_samples(rng, 5, max_degree=2, height=4):
        c = random_samples(rng, 1, max_degree=2, height=4)[0][0]
        left = sandwich(sandwich(a, f, b), f, c)
        right = sandwich(a, f, sandwich(b, f, c))
        assert left == right


def test_rho_examples():
    h = parse_mobius('2 z')
    assert rho(h, h, rm('z^2')) == rm('2 z^2')
    shift = parse_mobius('z + 1')
    assert rho(shift, parse_mobius('2 z'), RationalMap.constant(3)) == RationalMap.constant(2)


def test_matching_r2():
    r2 = matching_r2(rm('z^2'), parse_mobius('z + 1'), Mobius.identity())
    assert r2 == rm('z^2 + 2 z + 1')


def test_identity_isomorphism_holds_with_corollary():
    samples = random_samples(random.Random(7), 50)
    report = verify_sandwich_isomorphism(rm('z^2'), Mobius.identity(), Mobius.identity(), samples)
    assert report['status'] == 'ok'
    assert report['corollary'] is True
    assert report['message'] == 'all identities hold (n=50)'


def test_shift_and_scale_isomorphism():
    samples = random_samples(random.Random(7), 100)
    report = verify_sandwich_isomorphism(rm('z^3 + z'), parse_mobius('z + 1'), parse_mobius('2 z'), samples)
    assert report['status'] == 'ok'
    assert report['corollary'] is None
    assert report['failures'] == []


def test_wrong_r2_is_caught():
    samples = random_samples(random.Random(7), 100)
    report = verify_sandwich_isomorphism(
        rm('z^3 + z'), parse_mobius('z + 1'), parse_mobius('2 z'), samples, r2=rm('z^3 + z'),
    )
    assert report['status'] == 'failed'
    assert report['failures']
    assert report['message'].startswith('counterexample at sample')


def test_conjugating_isomorphism():
    samples = random_samples(random.Random(11), 30)
    h = parse_mobius('(1/2+1i) z + 3')
    report = verify_sandwich_isomorphism(rm('i z^2 + 1'), h, h, samples, conjugate=True)
    assert report['status'] == 'ok'
    assert report['corollary'] is True


def test_verification_threads_agree():
    samples = random_samples(random.Random(5), 20)
    args = (rm('z^2 - 1'), parse_mobius('z - 1'), parse_mobius('3 z'), samples)
    assert verify_sandwich_isomorphism(*args, threads=4) == verify_sandwich_isomorphism(*args)


def test_constant_r1_is_rejected():
    with pytest.raises(ValueError):
        verify_sandwich_isomorphism(RationalMap.constant(1), Mobius.identity(), Mobius.identity(), [])


def test_critical_point_polynomials():
    assert critical_point_polynomial(rm('z^2')) == parse_poly('2 z')
    assert critical_point_polynomial(rm('(z^2 + 1) / (z)')) == parse_poly('z^2 - 1')
    with pytest.raises(ValueError):
        critical_point_polynomial(RationalMap.constant(5))


def test_critical_data_of_a_cubic():
    data = critical_data(rm('1/2 z^3 + 1/2 z^2'))
    assert set(data['roots']) == {GaussRat(0), GaussRat(Fraction(-2, 3))}
    assert data['finiteCount'] == 2
    assert data['infinityCount'] == 2
    assert GaussRat(Fraction(2, 27)) in data['criticalValues']


def test_critical_data_with_irreducible_factor():
    data = critical_data(rm('z^3 - 6 z'))
    # 3 z^2 - 6 has no roots in Q(i)
    assert data['roots'] == []
    assert data['irreducible'] == [(parse_poly('z^2 - 2'), 1)]


def test_common_factors_cancel():
    r = RationalMap(parse_poly('z^2 - 1'), parse_poly('z - 1'))
    assert r == rm('z + 1')
    assert r.is_polynomial()
    again = RationalMap(r.num, r.den)
    assert again == r


def test_denominator_is_made_monic():
    r = RationalMap(parse_poly('z'), parse_poly('2 z + 2'))
    assert r.den == parse_poly('z + 1')
    assert r.num == parse_poly('1/2 z')


def test_mobius_inverse_and_singular():
    m = Mobius(1, 2, 3, 4)
    assert m.compose(m.inverse()) == Mobius.identity()
    assert compose(m.to_rational_map(), m.inverse().to_rational_map()) == RationalMap.identity()
    with pytest.raises(ValueError):
        Mobius(1, 2, 2, 4)
    with pytest.raises(ValueError):
        Mobius.from_rational_map(rm('z^2'))


def test_evaluation_and_pole():
    r = rm('(z + 1) / (z - 1)')
    assert r(3) == GaussRat(2)
    assert r(1) is None


@pytest.mark.parametrize('text', [
    'z^3 + z',
    '(z^2 + 1) / (z)',
    '2 z^3 - 1/2 z + 3i',
    '(1/2+3/4i) z',
    '(z) / (z^2 - 2i)',
    '- z^2 + 1',
    '(1) / (0)',
    '0',
])
def test_printed_literals(text):
    assert format_rational_map(rm(text)) == text


def test_compact_terms_are_accepted():
    assert rm('2z^3-z') == rm('2 z^3 - z')


def test_parenthesized_numerator_alone_is_a_polynomial():
    assert rm('(z + 1)') == rm('z + 1')
    assert rm('(2z^2 - 3i)') == rm('2 z^2 - 3i')
    assert rm('(1/2+3/4i)') == rm('(1/2+3/4i) z^0')


@pytest.mark.parametrize('text', ['z^2 +', '(z', '(0) / (0)', 'z^2 / z', 'q', '(z) / z'])
def test_malformed_literals(text):
    with pytest.raises(RationalMapFormatError):
        parse_rational_map(text)


def test_mobius_literal_needs_degree_one():
    assert parse_mobius('z + 1') == Mobius(1, 1, 0, 1)
    with pytest.raises(RationalMapFormatError):
        parse_mobius('z^2')


@pytest.mark.parametrize('value, text', [
    (GaussRat(Fraction(3, 4)), '3/4'),
    (GaussRat(0, 3), '3i'),
    (GaussRat(Fraction(1, 2), Fraction(-1, 3)), '(1/2-1/3i)'),
    (GaussRat(-2), '-2'),
])
def test_gaussian_rational_text(value, text):
    assert str(value) == text


def test_gaussian_arithmetic():
    i = GaussRat.i()
    assert i * i == GaussRat(-1)
    assert (GaussRat(1, 1) / GaussRat(1, -1)) == i
    assert GaussRat(3, 4).norm() == 25
    assert GaussRat(2) ** -2 == GaussRat(Fraction(1, 4))


def test_poly_division_and_factoring():
    q, r = divmod(parse_poly('z^2 - 1'), parse_poly('z - 1'))
    assert q == parse_poly('z + 1')
    assert r.is_zero()
    roots, others = factor(parse_poly('z^2 + 1'))
    assert set(roots) == {GaussRat.i(), -GaussRat.i()}
    assert others == []
    assert poly_gcd(parse_poly('z^2 - 1'), parse_poly('z^2 + 2 z + 1')) == parse_poly('z + 1')
    assert poly_from_roots([1, -1]) == parse_poly('z^2 - 1')


def test_compose_all_order():
    assert compose_all(rm('z + 1'), rm('2 z'), rm('z^2')) == rm('2 z^2 + 1')


def test_random_instances_hold_with_and_without_conjugation():
    report = verify_random_instances(random.Random(2024), 100)
    assert report['status'] == 'ok', report['message']
    assert report['instances'] == 100
    assert 0 < report['conjugateInstances'] < 100
    assert report['failedInstances'] == []


def test_random_instances_are_repeatable():
    first = verify_random_instances(random.Random(5), 5, samples_per_instance=1)
    second = verify_random_instances(random.Random(5), 5, samples_per_instance=1)
    assert first == second
    with pytest.raises(ValueError):
        verify_random_instances(random.Random(5), 0)


def test_composition_multiplies_degrees():
    rng = random.Random(31)
    for _ in range(40):
        a = random_rational_map(rng, 3, 6)
        b = random_rational_map(rng, 3, 6)
        assert compose(a, b).degree == a.degree * b.degree


def test_normalization_is_idempotent():
    rng = random.Random(47)
    for _ in range(40):
        r = random_rational_map(rng, 3, 6)
        c = GaussRat.random(rng, 6)
        if c.is_zero():
            continue
        assert RationalMap(r.num, r.den) == r
        assert RationalMap(r.num.scale(c), r.den.scale(c)) == r
    assert RationalMap(Poly.one(), Poly.zero()) == RationalMap.infinity()


def test_mobius_maps_are_closed_under_composition_and_inverse():
    rng = random.Random(59)
    for _ in range(40):
        m1 = random_mobius(rng, 6)
        m2 = random_mobius(rng, 6)
        composed = m1.compose(m2)
        assert composed.to_rational_map() == compose(m1.to_rational_map(), m2.to_rational_map())
        assert composed.to_rational_map().degree == 1
        assert m1.compose(m1.inverse()) == Mobius.identity()
        assert compose(m1.inverse().to_rational_map(), m1.to_rational_map()) == RationalMap.identity()
