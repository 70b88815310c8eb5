"""
Connected components of the Julia complement on a classified pixel grid
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

# Pixel classes
ESCAPED = 0
BASIN = 1
RETAINED = 2


class UnionFind:
    """Disjoint sets over 0..n-1 with union by size and path halving"""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]


@dataclass(frozen=True)
class ComponentCensus:
    """
    Components in raster first-seen order. bounded[i] is False when component
    i touches the window frame. zero_component is the index of the component
    holding the pixel at the origin, or None.
    """

    sizes: Tuple[int, ...]
    bounded: Tuple[bool, ...]
    classes: Tuple[int, ...]
    zero_component: Optional[int] = None

    @property
    def count(self) -> int:
        return len(self.sizes)

    def unbounded_count(self) -> int:
        return sum(1 for b in self.bounded if not b)


def _same_class_pairs(classes: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Flat index pairs of 4-neighbours sharing a non-retained class"""
    rows, cols = classes.shape
    index = np.arange(rows * cols).reshape(rows, cols)

    horizontal = (classes[:, :-1] == classes[:, 1:]) & (classes[:, :-1] != RETAINED)
    vertical = (classes[:-1, :] == classes[1:, :]) & (classes[:-1, :] != RETAINED)

    first = np.concatenate([index[:, :-1][horizontal], index[:-1, :][vertical]])
    second = np.concatenate([index[:, 1:][horizontal], index[1:, :][vertical]])
    return first, second


def complement_components(classes: np.ndarray, zero_pixel: Optional[Tuple[int, int]] = None) -> ComponentCensus:
    """
    4-connected components of the non-retained pixels. Neighbours are joined
    only when they share a class: an escaped pixel next to a basin pixel has
    the Julia set between them.
    """
    rows, cols = classes.shape
    flat = classes.ravel()
    uf = UnionFind(rows * cols)
    first, second = _same_class_pairs(classes)
    for a, b in zip(first.tolist(), second.tolist()):
        uf.union(a, b)

    frame = np.zeros((rows, cols), dtype=bool)
    frame[0, :] = frame[-1, :] = frame[:, 0] = frame[:, -1] = True
    frame_flat = frame.ravel()

    order = {}
    sizes: List[int] = []
    touches: List[bool] = []
    component_classes: List[int] = []
    labels = np.full(rows * cols, -1, dtype=np.int64)
    for pixel in range(rows * cols):
        if flat[pixel] == RETAINED:
            continue
        root = uf.find(pixel)
        if root not in order:
            order[root] = len(sizes)
            sizes.append(0)
            touches.append(False)
            component_classes.append(int(flat[pixel]))
        label = order[root]
        labels[pixel] = label
        sizes[label] += 1
        if frame_flat[pixel]:
            touches[label] = True

    zero_component = None
    if zero_pixel is not None:
        row, col = zero_pixel
        if 0 <= row < rows and 0 <= col < cols and labels[row * cols + col] >= 0:
            zero_component = int(labels[row * cols + col])

    return ComponentCensus(
        tuple(sizes),
        tuple(not t for t in touches),
        tuple(component_classes),
        zero_component,
    )
