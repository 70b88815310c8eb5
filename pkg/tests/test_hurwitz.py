import pytest

from hurwitz.braid import braid_move, canonical, inverse_braid_move
from hurwitz.enumeration import canonical_forms, enumerate_constellations, generic_polynomial_passport
from hurwitz.orbit import (
    OrbitBudget,
    Verdict,
    hurwitz_orbit,
    is_symmetric,
    match_collections,
    same_hurwitz_class,
)
from monodromy.collection import CoveringCollection
from monodromy.constellation import (
    Constellation,
    chebyshev_polynomial,
    generic_polynomial,
    monomial,
)


def test_braid_move_example():
    c = Constellation.from_cycles(3, ['(1 2)', '(2 3)'])
    moved = braid_move(c, 1)
    assert [str(b) for b in moved.branches] == ['(1 3)', '(1 2)']


def test_braid_move_carries_generic_cubic_to_its_sibling(generic3, generic3b):
    assert braid_move(generic3, 2) == generic3b


def test_moves_invert_each_other_and_keep_product(rng, random_constellation):
    for _ in range(100):
        c = random_constellation(rng, min_degree=2)
        if len(c.branches) < 2:
            continue
        i = rng.randint(1, len(c.branches) - 1)
        moved = braid_move(c, i)
        assert inverse_braid_move(moved, i) == c
        assert braid_move(inverse_braid_move(c, i), i) == c
        assert moved.product() == c.product()
        assert moved.passport() == c.passport()


def test_braid_index_out_of_range(generic3):
    with pytest.raises(IndexError):
        braid_move(generic3, 0)
    with pytest.raises(IndexError):
        inverse_braid_move(generic3, 3)


def test_canonical_form_ignores_relabeling(rng, random_constellation):
    for _ in range(100):
        c = random_constellation(rng)
        sheets = list(range(1, c.degree + 1))
        rng.shuffle(sheets)
        relabeled = c.relabel({i: s for i, s in enumerate(sheets, 1)})
        assert canonical(relabeled) == canonical(c)
        assert canonical(c).to_constellation().passport() == c.passport()


def test_canonical_form_separates_orderings(generic3, generic3b):
    assert canonical(generic3) != canonical(generic3b)


def test_generic_cubic_orbit(generic3):
    result = hurwitz_orbit(generic3)
    assert len(result) == 3
    assert result.exhausted
    assert canonical(generic3) in result


def test_z2_orbit_is_a_single_form(z2):
    result = hurwitz_orbit(z2)
    assert len(result) == 1
    assert result.exhausted


def test_state_cap_leaves_orbit_unexhausted(generic3):
    result = hurwitz_orbit(generic3, OrbitBudget(max_states=1))
    assert not result.exhausted
    assert len(result) == 1


def test_depth_cap_leaves_orbit_unexhausted():
    result = hurwitz_orbit(generic_polynomial(4), OrbitBudget(max_depth=1))
    assert not result.exhausted
    assert result.depth == 1


@pytest.mark.parametrize('degree', [3, 4])
def test_orbit_matches_brute_force_enumeration(degree):
    c = generic_polynomial(degree)
    expected = canonical_forms(enumerate_constellations(degree, generic_polynomial_passport(degree)))
    assert hurwitz_orbit(c).forms == expected


def test_orbit_does_not_depend_on_thread_count():
    c = generic_polynomial(4)
    single = hurwitz_orbit(c, threads=1)
    pooled = hurwitz_orbit(c, threads=4)
    assert single.forms == pooled.forms
    assert single.sorted_forms() == pooled.sorted_forms()


def test_orbit_does_not_depend_on_representative():
    c = generic_polynomial(4)
    moved = inverse_braid_move(braid_move(c, 1), 3)
    assert hurwitz_orbit(moved).forms == hurwitz_orbit(c).forms


def test_same_hurwitz_class_verdicts(generic3, generic3b, z3):
    assert same_hurwitz_class(generic3, generic3b) is Verdict.YES
    assert same_hurwitz_class(generic3, z3) is Verdict.NO
    assert same_hurwitz_class(generic3, generic_polynomial(4)) is Verdict.NO
    assert same_hurwitz_class(generic3, generic3b, OrbitBudget(max_states=1)) is Verdict.INCONCLUSIVE
    assert str(Verdict.INCONCLUSIVE) == 'inconclusive'


@pytest.mark.parametrize('degree', [2, 3, 4, 5])
def test_generic_polynomials_are_symmetric(degree):
    assert is_symmetric(generic_polynomial(degree)) is Verdict.YES


@pytest.mark.parametrize('degree', [2, 3, 4, 5, 6])
def test_monomials_are_symmetric(degree):
    assert is_symmetric(monomial(degree)) is Verdict.YES


def test_chebyshev_quartic_is_symmetric():
    assert is_symmetric(chebyshev_polynomial(4)) is Verdict.YES


def test_match_collections(z2, generic3, generic3b, z3):
    left = CoveringCollection.from_constellations([z2, generic3], labels=['a', 'b'])
    right = CoveringCollection.from_constellations([generic3b, z2], labels=['x', 'y'])
    result = match_collections(left, right)
    assert result['status'] == 'matched'
    assert result['pairs'] == [{'left': 'a', 'right': 'y'}, {'left': 'b', 'right': 'x'}]

    other = CoveringCollection.from_constellations([z2, z3], labels=['x', 'y'])
    result = match_collections(left, other)
    assert result['status'] == 'unmatched'
    assert result['unmatchedLeft'] == ['b']
    assert result['unmatchedRight'] == ['y']


def test_match_collections_reports_inconclusive(generic3, generic3b):
    left = CoveringCollection.from_constellations([generic3])
    right = CoveringCollection.from_constellations([generic3b])
    result = match_collections(left, right, OrbitBudget(max_states=1))
    assert result['status'] == 'inconclusive'


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        OrbitBudget(max_states=0)
    with pytest.raises(ValueError):
        OrbitBudget(max_states=10, max_depth=0)


def test_same_hurwitz_class_is_symmetric_and_transitive(rng):
    c = generic_polynomial(4)
    first = braid_move(inverse_braid_move(c, 2), 1)
    second = first
    for _ in range(5):
        second = braid_move(second, rng.randint(1, len(second.branches) - 1))
    second = second.relabel({1: 3, 2: 1, 3: 4, 4: 2})

    assert same_hurwitz_class(c, first) is Verdict.YES
    assert same_hurwitz_class(first, c) is Verdict.YES
    assert same_hurwitz_class(first, second) is Verdict.YES
    assert same_hurwitz_class(second, first) is Verdict.YES
    assert same_hurwitz_class(c, second) is Verdict.YES

    other = chebyshev_polynomial(4)
    assert same_hurwitz_class(second, other) is Verdict.NO
    assert same_hurwitz_class(other, second) is Verdict.NO
