import csv
import random

import numpy as np
import pytest

from polyvis import (
    BLOCK_SURVEY,
    BlockHit,
    LatticePoint,
    ProfileCache,
    Region,
    ResourceLimitError,
    blocks_to_csv,
    classify_region,
    find_all_blocks,
    find_block,
    find_point_with_radius,
    is_visible,
    is_visible_direct,
    parse_family,
    radius_to_visible,
    region_to_csv,
    scan_block_range,
    survey_family,
)

X = parse_family("1")
XSQ_X = parse_family("1,1")


def square(n: int) -> Region:
    return Region(1, n, 1, n)


def test_region_validation():
    r = Region(2, 5, 3, 10)
    assert (r.width, r.height) == (4, 8)
    with pytest.raises(ValueError):
        Region(0, 5, 1, 5)
    with pytest.raises(ValueError):
        Region(5, 4, 1, 5)
    with pytest.raises(ValueError):
        Region(1, 5, 6, 5)


def test_classify_examples():
    grid = classify_region(X, square(5))
    assert int(grid.sum()) == 19
    grid = classify_region(XSQ_X, Region(13, 14, 195, 196))
    assert not grid.any()
    grid = classify_region(X, square(1))
    assert grid.shape == (1, 1) and bool(grid[0, 0])


def test_classify_matches_pointwise(family):
    rng = random.Random(sum(ord(c) for c in family.spec) + 1)
    for _ in range(3):
        x0 = rng.randrange(1, 60)
        y0 = rng.randrange(1, 60)
        region = Region(x0, x0 + 39, y0, y0 + 39)
        grid = classify_region(family, region)
        for i in range(region.width):
            for j in range(region.height):
                expect = is_visible(family, LatticePoint(x0 + i, y0 + j)).visible
                assert bool(grid[i, j]) == expect


def test_find_block_examples():
    hit = find_block(XSQ_X, 2, square(1000))
    assert hit == BlockHit(LatticePoint(13, 195), 2)
    for dx in (0, 1):
        for dy in (0, 1):
            assert not is_visible_direct(XSQ_X, LatticePoint(13 + dx, 195 + dy))

    assert find_block(parse_family("4,9"), 2, square(1000)) is None
    assert find_block(X, 1, square(10)) == BlockHit(LatticePoint(2, 2), 1)


def test_find_all_blocks_matches_exhaustive():
    region = square(60)
    size = 2
    hits = find_all_blocks(X, size, region)
    grid = classify_region(X, region)
    expected = [
        (i + 1, j + 1)
        for i in range(region.width - size + 1)
        for j in range(region.height - size + 1)
        if not grid[i : i + size, j : j + size].any()
    ]
    assert [(h.corner.a, h.corner.b) for h in hits] == expected
    assert (hits[0].corner.a, hits[0].corner.b) == (14, 20)
    for h in hits:
        for dx in range(size):
            for dy in range(size):
                assert not is_visible_direct(X, LatticePoint(h.corner.a + dx, h.corner.b + dy))


def test_find_all_blocks_small_square():
    # (13,195) is first over [1,1000]^2 by x-major order, but inside [1,100]^2
    # the only block sits at (20,21).
    hits = find_all_blocks(XSQ_X, 2, square(100))
    assert hits == [BlockHit(LatticePoint(20, 21), 2)]
    for dx in (0, 1):
        for dy in (0, 1):
            assert not is_visible_direct(XSQ_X, LatticePoint(20 + dx, 21 + dy))


def test_find_all_blocks_empty_cases():
    assert find_all_blocks(parse_family("4,9"), 2, square(300)) == []
    assert find_block(X, 5, Region(1, 10, 1, 3)) is None
    assert find_all_blocks(X, 5, Region(1, 10, 1, 3)) == []


def test_scan_block_range_partition_matches_full():
    region = square(300)
    full = find_block(XSQ_X, 2, region)
    partial = [
        scan_block_range(XSQ_X, 2, region, lo, hi)
        for lo, hi in ((1, 100), (101, 200), (201, 300))
    ]
    found = [h for h in partial if h is not None]
    best = min(found, key=lambda h: (h.corner.a, h.corner.b))
    assert best == full == BlockHit(LatticePoint(13, 195), 2)


def test_block_csv(tmp_path):
    hits = find_all_blocks(X, 2, square(30))
    path = tmp_path / "blocks.csv"
    blocks_to_csv(hits, path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["corner_x", "corner_y"]
    assert rows[1:] == [[str(h.corner.a), str(h.corner.b)] for h in hits]
    assert ["14", "20"] in rows[1:]


def test_region_csv(tmp_path):
    region = Region(2, 3, 5, 6)
    grid = classify_region(X, region)
    path = tmp_path / "grid.csv"
    region_to_csv(grid, region, path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["x", "y", "visible"]
    assert len(rows) == 5
    for x, y, flag in rows[1:]:
        assert flag == str(int(grid[int(x) - 2, int(y) - 5]))


def test_radius_examples():
    assert radius_to_visible(X, LatticePoint(3, 5)).distance == 0
    assert radius_to_visible(X, LatticePoint(2, 2)).distance == 1
    assert radius_to_visible(XSQ_X, LatticePoint(13, 195)).distance == 2
    assert radius_to_visible(XSQ_X, LatticePoint(13, 195), max_layers=1).distance == -1
    assert radius_to_visible(X, LatticePoint(2, 2), max_layers=0).distance == -1


def test_radius_is_chebyshev_distance_to_visible(family):
    """BFS over right/up/diagonal moves finds min max(dx, dy) to a visible point."""
    cache = ProfileCache(family)

    def oracle(x0: int, y0: int, limit: int) -> int:
        for k in range(limit + 1):
            ring = {(i, k) for i in range(k + 1)} | {(k, j) for j in range(k + 1)}
            if any(cache.is_visible(x0 + i, y0 + j) for i, j in sorted(ring)):
                return k
        return -1

    rng = random.Random(555)
    for _ in range(120):
        x0, y0 = rng.randrange(1, 41), rng.randrange(1, 41)
        limit = rng.randrange(0, 7)
        got = radius_to_visible(family, LatticePoint(x0, y0), max_layers=limit, cache=cache)
        assert got.distance == oracle(x0, y0, limit)
        assert got.origin == LatticePoint(x0, y0)


def test_find_point_with_radius():
    assert find_point_with_radius(X, Region(2, 10, 2, 10), 1) == LatticePoint(2, 2)
    assert find_point_with_radius(X, Region(2, 4, 2, 4), 0) == LatticePoint(2, 3)
    assert find_point_with_radius(X, Region(2, 10, 2, 10), 99) is None
    with pytest.raises(ValueError):
        find_point_with_radius(X, square(5), -1)


def test_caps():
    with pytest.raises(ResourceLimitError):
        classify_region(X, square(2001))
    with pytest.raises(ResourceLimitError):
        find_block(X, 2, square(11), cap=10)
    with pytest.raises(ResourceLimitError):
        find_point_with_radius(X, square(11), 1, cap=10)
    with pytest.raises(ValueError):
        find_block(X, 0, square(5))
    with pytest.raises(ValueError):
        find_all_blocks(X, 0, square(5))


def test_survey_table_shape():
    assert len(BLOCK_SURVEY) == 15
    assert [row[0] for row in BLOCK_SURVEY] == list(range(1, 16))
    assert survey_family(4, 4).spec == "1,1"
    assert survey_family(12, 12).spec == "1,1"
    assert survey_family(2, 5).spec == "2,5"
