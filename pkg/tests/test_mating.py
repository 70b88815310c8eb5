import pytest

from hurwitz.braid import braid_move
from hurwitz.orbit import Verdict, same_hurwitz_class
from monodromy.constellation import (
    Constellation,
    ConstellationError,
    Passport,
    chebyshev_polynomial,
    generic_polynomial,
    genus,
    infinity_index,
    monomial,
    validate,
)
from monodromy.perm import cycle_type
from surgery.connected_sum import sum_of_quadratics
from surgery.mating import (
    MatingError,
    equator_is_unbranched,
    equator_monodromy,
    formal_mating,
    inner_count,
    mirror,
)


def finite_passport(c):
    index = infinity_index(c)
    return Passport(tuple(cycle_type(b) for i, b in enumerate(c.branches) if i != index))


def random_generic(rng, degree):
    c = generic_polynomial(degree)
    for _ in range(rng.randint(0, 5)):
        c = braid_move(c, rng.randint(1, len(c.branches) - 1))
    sheets = list(range(1, degree + 1))
    rng.shuffle(sheets)
    return c.relabel({i: s for i, s in enumerate(sheets, 1)})


def test_mirror_reverses_and_inverts(generic3):
    m = mirror(generic3)
    assert [str(b) for b in m.branches] == ['(1 3 2)', '(2 3)', '(1 2)']
    assert validate(m).ok
    assert m.passport() == generic3.passport()
    assert genus(m) == genus(generic3)
    assert mirror(m) == generic3


def test_mirror_rejects_invalid_input():
    with pytest.raises(ConstellationError) as excinfo:
        mirror(Constellation.from_cycles(3, ['(1 2)', '(2 3)']))
    assert not excinfo.value.report.ok


def test_z2_mated_with_z2(z2):
    assert formal_mating(z2, z2) == monomial(2)


def test_generic_cubics_mate_to_four_transpositions(generic3):
    mated = formal_mating(generic3, generic3)
    assert [str(b) for b in mated.branches] == ['(1 2)', '(2 3)', '(1 2)', '(1 3)']
    assert equator_monodromy(mated, inner_count(generic3)) == generic3.branches[-1].inverse()


@pytest.mark.parametrize('degree', [2, 3, 4, 5])
def test_random_matings_are_unbranched_spheres(rng, degree):
    for _ in range(10):
        inner = random_generic(rng, degree)
        outer = random_generic(rng, degree)
        mated = formal_mating(inner, outer)
        assert validate(mated).ok
        assert genus(mated) == 0
        assert mated.passport() == finite_passport(inner).union(finite_passport(outer))
        assert equator_is_unbranched(mated, inner_count(inner))


def test_mating_of_generic_cubics_is_a_sum_of_quadratics(generic3):
    mated = formal_mating(generic3, generic3)
    assert same_hurwitz_class(mated, sum_of_quadratics(3)) is Verdict.YES


def test_chebyshev_and_monomial_mate(z3):
    mated = formal_mating(chebyshev_polynomial(3), z3)
    assert validate(mated).ok
    assert mated.degree == 3


def test_mating_errors(z2, z3):
    with pytest.raises(MatingError):
        formal_mating(z2, z3)
    with pytest.raises(MatingError):
        formal_mating(sum_of_quadratics(3), generic_polynomial(3))
    with pytest.raises(MatingError):
        formal_mating(monomial(1), monomial(1))
