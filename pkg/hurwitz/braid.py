"""
Braid moves and canonical forms

A braid move drags branch point i around branch point i + 1 (target
homeomorphisms); a simultaneous relabeling of sheets is a source
homeomorphism. Two constellations are Hurwitz equivalent iff some chain of
braid moves followed by a relabeling carries one onto the other.
"""
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from monodromy.constellation import Constellation
from monodromy.perm import Perm, inverse


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Least relabeled tuple, as image tuples. Equal forms iff the constellations
    differ by a sheet relabeling.
    """

    degree: int
    branches: Tuple[Tuple[int, ...], ...]

    def to_constellation(self) -> Constellation:
        return Constellation(self.degree, tuple(Perm(images) for images in self.branches))


def _check_index(c: Constellation, i: int) -> None:
    if not 1 <= i < len(c.branches):
        raise IndexError(f'Braid index {i} out of range 1..{len(c.branches) - 1}')


def braid_move(c: Constellation, i: int) -> Constellation:
    """(.., s_i, s_i+1, ..) -> (.., s_i s_i+1 s_i^-1, s_i, ..); i is 1-based"""
    _check_index(c, i)
    branches = list(c.branches)
    a, b = branches[i - 1], branches[i]
    branches[i - 1] = b.conjugate(inverse(a))
    branches[i] = a
    return c.replace_branches(branches)


def inverse_braid_move(c: Constellation, i: int) -> Constellation:
    """(.., s_i, s_i+1, ..) -> (.., s_i+1, s_i+1^-1 s_i s_i+1, ..)"""
    _check_index(c, i)
    branches = list(c.branches)
    a, b = branches[i - 1], branches[i]
    branches[i - 1] = b
    branches[i] = a.conjugate(b)
    return c.replace_branches(branches)


def _bfs_labels(branches: List[Tuple[int, ...]], degree: int, start: int) -> Dict[int, int]:
    """Label sheets 1, 2, ... in the order BFS from start discovers them, entries in tuple order"""
    labels = {start: 1}
    queue = deque([start])
    while queue:
        point = queue.popleft()
        for images in branches:
            image = images[point - 1]
            if image not in labels:
                labels[image] = len(labels) + 1
                queue.append(image)
    if len(labels) != degree:
        raise ValueError('Canonical form needs a transitive constellation')
    return labels


def _relabel_images(images: Tuple[int, ...], labels: Dict[int, int]) -> Tuple[int, ...]:
    result = [0] * len(images)
    for point, image in enumerate(images, 1):
        result[labels[point] - 1] = labels[image]
    return tuple(result)


def canonical(c: Constellation) -> CanonicalForm:
    """
    BFS labeling commutes with relabeling the input, so the set of candidates
    (one per start sheet) is the same for all relabelings of a tuple and so
    is its minimum. Exact for transitive tuples of any degree.
    """
    branches = [b.images for b in c.branches]
    if not branches:
        return CanonicalForm(c.degree, ())
    best = None
    for start in range(1, c.degree + 1):
        labels = _bfs_labels(branches, c.degree, start)
        candidate = tuple(_relabel_images(images, labels) for images in branches)
        if best is None or candidate < best:
            best = candidate
    return CanonicalForm(c.degree, best)
