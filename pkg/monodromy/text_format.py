"""
Constellation text format

One record:

    degree <d>
    target_genus <g>
    branch <cycle notation>
    branch <cycle notation>
    ...

Streams hold several records separated by blank lines. Lines starting with
'#' are comments. A collection record may start with

    component <label> target <target label>
"""
from pathlib import Path
from typing import List, Optional, Tuple

from monodromy.collection import CoveringCollection, CoveringComponent
from monodromy.constellation import Constellation, ConstellationError, validate
from monodromy.perm import parse_perm


class ConstellationFormatError(ValueError):
    """Malformed constellation text, with the source name and 1-based line"""

    def __init__(self, message: str, source: str = '<string>', line: Optional[int] = None):
        self.source = source
        self.line = line
        location = f'{source}:{line}' if line is not None else source
        super().__init__(f'{location}: {message}')


def _split_records(text: str) -> List[List[Tuple[int, str]]]:
    """Group non-comment lines into blank-line separated records, keeping line numbers"""
    records: List[List[Tuple[int, str]]] = []
    current: List[Tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith('#'):
            continue
        if not line:
            if current:
                records.append(current)
                current = []
            continue
        current.append((number, line))
    if current:
        records.append(current)
    return records


def _parse_record(lines: List[Tuple[int, str]], source: str, check: bool) -> Constellation:
    degree = None
    target_genus = None
    branch_lines: List[Tuple[int, str]] = []

    for number, line in lines:
        keyword, _, rest = line.partition(' ')
        rest = rest.strip()
        if keyword == 'degree':
            if degree is not None:
                raise ConstellationFormatError('duplicate degree line', source, number)
            try:
                degree = int(rest)
            except ValueError:
                raise ConstellationFormatError(f'degree {rest!r} is not an integer', source, number)
            if degree < 1:
                raise ConstellationFormatError(f'degree must be >= 1, got {degree}', source, number)
        elif keyword == 'target_genus':
            try:
                target_genus = int(rest)
            except ValueError:
                raise ConstellationFormatError(f'target_genus {rest!r} is not an integer', source, number)
        elif keyword == 'branch':
            if degree is None:
                raise ConstellationFormatError('branch line before degree line', source, number)
            branch_lines.append((number, rest))
        else:
            raise ConstellationFormatError(f'unknown keyword {keyword!r}', source, number)

    first_line = lines[0][0] if lines else None
    if degree is None:
        raise ConstellationFormatError('missing degree line', source, first_line)
    if target_genus is None:
        target_genus = 0

    branches = []
    for number, notation in branch_lines:
        try:
            branches.append(parse_perm(notation, degree))
        except ValueError as e:
            raise ConstellationFormatError(str(e), source, number)

    try:
        constellation = Constellation(degree, tuple(branches), target_genus)
    except ValueError as e:
        raise ConstellationFormatError(str(e), source, first_line)

    if check:
        report = validate(constellation)
        if not report.ok:
            raise ConstellationError(report, source=f'{source}:{first_line}')
    return constellation


def parse_constellation(text: str, source: str = '<string>', check: bool = True) -> Constellation:
    """Parse exactly one record; invalid data raises ConstellationError with the validate() report"""
    records = _split_records(text)
    if len(records) != 1:
        raise ConstellationFormatError(f'expected one constellation record, found {len(records)}', source)
    return _parse_record(records[0], source, check)


def parse_constellations(text: str, source: str = '<string>', check: bool = True) -> List[Constellation]:
    return [_parse_record(record, source, check) for record in _split_records(text)]


def format_constellation(c: Constellation) -> str:
    lines = [f'degree {c.degree}', f'target_genus {c.target_genus}']
    lines.extend(f'branch {b}' for b in c.branches)
    return '\n'.join(lines) + '\n'


def format_constellations(cs: List[Constellation]) -> str:
    return '\n'.join(format_constellation(c) for c in cs)


def parse_collection(text: str, source: str = '<string>') -> CoveringCollection:
    components = []
    for index, record in enumerate(_split_records(text), 1):
        label, target = f'c{index}', f't{index}'
        number, head = record[0]
        if head.startswith('component'):
            parts = head.split()
            if len(parts) != 4 or parts[2] != 'target':
                raise ConstellationFormatError(
                    'component header must read "component <label> target <target>"', source, number
                )
            label, target = parts[1], parts[3]
            record = record[1:]
            if not record:
                raise ConstellationFormatError(f'component {label} has no constellation', source, number)
        components.append(CoveringComponent(label, target, _parse_record(record, source, True)))
    if not components:
        raise ConstellationFormatError('collection is empty', source)
    return CoveringCollection(tuple(components))


def format_collection(collection: CoveringCollection) -> str:
    blocks = []
    for component in collection.components:
        header = f'component {component.label} target {component.target}\n'
        blocks.append(header + format_constellation(component.constellation))
    return '\n'.join(blocks)


def read_constellation_file(path: str) -> Constellation:
    return parse_constellation(Path(path).read_text(), source=str(path))


def write_constellation_file(path: str, c: Constellation) -> None:
    Path(path).write_text(format_constellation(c))
