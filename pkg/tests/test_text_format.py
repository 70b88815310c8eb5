import pytest

from monodromy.collection import CoveringCollection
from monodromy.constellation import ConstellationError, generic_polynomial, monomial
from monodromy.text_format import (
    ConstellationFormatError,
    format_collection,
    format_constellation,
    parse_collection,
    parse_constellation,
    parse_constellations,
    read_constellation_file,
    write_constellation_file,
)


def test_format_then_parse_gives_back_the_constellation(generic3):
    text = format_constellation(generic3)
    assert text.splitlines() == ['degree 3', 'target_genus 0', 'branch (1 2)', 'branch (2 3)', 'branch (1 2 3)']
    assert parse_constellation(text) == generic3


def test_comments_and_default_target_genus():
    c = parse_constellation('# z squared\ndegree 2\nbranch (1 2)\n# fiber over infinity\nbranch (1 2)\n')
    assert c == monomial(2)


def test_malformed_branch_reports_line():
    with pytest.raises(ConstellationFormatError) as info:
        parse_constellation('degree 3\nbranch (1 2\n', source='bad.constellation')
    assert info.value.line == 2
    assert str(info.value).startswith('bad.constellation:2:')


@pytest.mark.parametrize('text, line', [
    ('degree three\n', 1),
    ('degree 2\ncolour red\n', 2),
    ('branch (1 2)\ndegree 2\n', 1),
    ('degree 2\ndegree 2\n', 2),
])
def test_format_errors_carry_line_numbers(text, line):
    with pytest.raises(ConstellationFormatError) as info:
        parse_constellation(text)
    assert info.value.line == line


def test_invalid_data_raises_validation_error_unless_unchecked():
    text = 'degree 3\nbranch (1 2)\nbranch (2 3)\n'
    with pytest.raises(ConstellationError):
        parse_constellation(text, source='x.constellation')
    assert len(parse_constellation(text, check=False)) == 2


def test_stream_of_records():
    text = format_constellation(monomial(2)) + '\n' + format_constellation(generic_polynomial(3))
    assert parse_constellations(text) == [monomial(2), generic_polynomial(3)]
    with pytest.raises(ConstellationFormatError):
        parse_constellation(text)


def test_file_round_trip(tmp_path, generic3):
    path = tmp_path / 'out.constellation'
    write_constellation_file(str(path), generic3)
    assert read_constellation_file(str(path)) == generic3


def test_collection_text():
    text = (
        'component a target s\n'
        'degree 2\nbranch (1 2)\nbranch (1 2)\n'
        '\n'
        'component b target s\n'
        'degree 3\nbranch (1 2)\nbranch (2 3)\nbranch (1 2 3)\n'
    )
    collection = parse_collection(text)
    assert collection.labels == ('a', 'b')
    assert not collection.is_simple()
    assert parse_collection(format_collection(collection)) == collection


def test_collection_without_headers_gets_private_targets(generic3, z2):
    text = format_constellation(generic3) + '\n' + format_constellation(z2)
    collection = parse_collection(text)
    assert collection.is_simple()
    assert collection.degree == 3


def test_bad_component_header():
    with pytest.raises(ConstellationFormatError):
        parse_collection('component a\ndegree 1\n')


def test_collection_model(z2, z3):
    collection = CoveringCollection.from_constellations([z2, z3])
    assert collection.is_simple()
    assert not collection.is_single()
    assert collection.partner_degree() == 4
    assert all(report.ok for report in collection.validate().values())


def test_simplify_gives_each_component_its_own_target(z2, z3):
    shared = parse_collection(
        'component a target s\n' + format_constellation(z2) + '\n'
        'component b target s\n' + format_constellation(z3)
    )
    simple = shared.simplify()
    assert simple.is_simple()
    assert [c.target for c in simple.components] == ['s', 's#1']


def test_simplify_skips_names_already_in_use(z2, z3):
    shared = parse_collection(
        'component a target s\n' + format_constellation(z2) + '\n'
        'component b target s\n' + format_constellation(z3) + '\n'
        'component c target s#1\n' + format_constellation(z2)
    )
    simple = shared.simplify()
    assert simple.is_simple()
    assert [c.target for c in simple.components] == ['s', 's#2', 's#1']


def test_collection_invariants():
    with pytest.raises(ValueError):
        CoveringCollection(())
    with pytest.raises(ValueError):
        CoveringCollection.from_constellations([monomial(2), monomial(3)], labels=['x', 'x'])
    with pytest.raises(ValueError):
        CoveringCollection.from_constellations([monomial(1)]).partner_degree()
