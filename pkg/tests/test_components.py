import numpy as np

from dynamics.components import BASIN, ESCAPED, RETAINED, UnionFind, complement_components


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    uf.union(1, 4)
    assert uf.find(0) == uf.find(3)
    assert uf.find(2) != uf.find(0)
    assert uf.size[uf.find(0)] == 4


def test_all_escaped_is_one_unbounded_component():
    census = complement_components(np.full((6, 6), ESCAPED, dtype=np.uint8))
    assert census.count == 1
    assert census.bounded == (False,)
    assert census.sizes == (36,)


def test_disk_inside_escaped_square():
    classes = np.full((9, 9), ESCAPED, dtype=np.uint8)
    classes[3:6, 3:6] = BASIN
    census = complement_components(classes, zero_pixel=(4, 4))
    assert census.count == 2
    assert census.sizes == (72, 9)
    assert census.bounded == (False, True)
    assert census.classes == (ESCAPED, BASIN)
    assert census.zero_component == 1
    assert census.unbounded_count() == 1


def test_escaped_next_to_basin_stays_apart():
    census = complement_components(np.array([[ESCAPED, BASIN]], dtype=np.uint8))
    assert census.count == 2


def test_retained_wall_splits_components():
    classes = np.full((3, 5), ESCAPED, dtype=np.uint8)
    classes[:, 2] = RETAINED
    census = complement_components(classes, zero_pixel=(1, 2))
    assert census.sizes == (6, 6)
    assert sum(census.sizes) == np.count_nonzero(classes != RETAINED)
    assert census.zero_component is None


def test_diagonal_pixels_are_not_neighbours():
    classes = np.full((4, 4), RETAINED, dtype=np.uint8)
    classes[1, 1] = BASIN
    classes[2, 2] = BASIN
    census = complement_components(classes)
    assert census.count == 2
    assert census.bounded == (True, True)
