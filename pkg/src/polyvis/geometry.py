"""Region classification, invisible-block mining, and nearest-visible search.

The block search answers "where does the first n-by-n all-invisible block
sit" for a family; the radius search walks breadth-first through the
right/up/diagonal neighbor graph until it meets a visible point. Scan
order is frozen everywhere: x ascending outer, y ascending inner.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .errors import ResourceLimitError
from .polyfam import LatticePoint, PolyFamily, parse_family
from .visibility import ProfileCache

DEFAULT_REGION_CAP = 2000  # per dimension
DEFAULT_MAX_LAYERS = 200


@dataclass(frozen=True)
class Region:
    min_x: int
    max_x: int
    min_y: int
    max_y: int

    def __post_init__(self):
        if self.min_x < 1 or self.min_y < 1:
            raise ValueError(f"region coordinates must be >= 1, got {self}")
        if self.min_x > self.max_x or self.min_y > self.max_y:
            raise ValueError(f"empty region {self}")

    @property
    def width(self) -> int:
        return self.max_x - self.min_x + 1

    @property
    def height(self) -> int:
        return self.max_y - self.min_y + 1


@dataclass(frozen=True)
class BlockHit:
    corner: LatticePoint  # lower-left
    size: int

    def to_record(self) -> dict:
        return {"corner_x": self.corner.a, "corner_y": self.corner.b, "size": self.size}


@dataclass(frozen=True)
class RadiusResult:
    origin: LatticePoint
    distance: int  # -1 when the layer bound is exhausted


def _check_cap(region: Region, cap: int | None) -> None:
    limit = DEFAULT_REGION_CAP if cap is None else cap
    if region.width > limit or region.height > limit:
        raise ResourceLimitError(
            f"region {region.width}x{region.height} exceeds the {limit}x{limit} cap"
        )


def _invisible_column(cache: ProfileCache, a: int, min_y: int, max_y: int) -> np.ndarray:
    """Boolean array over y in [min_y, max_y]: True where (a, y) is invisible."""
    col = np.zeros(max_y - min_y + 1, dtype=bool)
    for m in cache.minimal_moduli(a):
        if m > max_y:
            continue
        start = ((min_y + m - 1) // m) * m
        if start <= max_y:
            col[start - min_y :: m] = True
    return col


def classify_region(family: PolyFamily, region: Region, cap: int | None = None) -> np.ndarray:
    """Visibility flags for the whole region; grid[i, j] is (min_x+i, min_y+j)."""
    _check_cap(region, cap)
    cache = ProfileCache(family)
    grid = np.empty((region.width, region.height), dtype=bool)
    for i in range(region.width):
        grid[i] = ~_invisible_column(cache, region.min_x + i, region.min_y, region.max_y)
    return grid


def region_to_csv(grid: np.ndarray, region: Region, path) -> None:
    """x,y,visible rows (0/1), row-major by x then y."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "y", "visible"])
        for i in range(region.width):
            for j in range(region.height):
                w.writerow([region.min_x + i, region.min_y + j, int(grid[i, j])])


def scan_block_range(
    family: PolyFamily,
    size: int,
    region: Region,
    x_lo: int,
    x_hi: int,
    cache: ProfileCache | None = None,
) -> BlockHit | None:
    """First all-invisible size x size block with corner x in [x_lo, x_hi].

    Exposed so a driver can split the x range among workers and keep the
    scan-order-first answer by taking the minimum (x, y) over the partial
    results; running it over the full corner range is exactly find_block.
    """
    if size < 1:
        raise ValueError(f"block size must be >= 1, got {size}")
    cache = cache or ProfileCache(family)
    lo = max(x_lo, region.min_x)
    hi = min(x_hi, region.max_x - size + 1)
    span = region.max_y - region.min_y + 1
    if span < size:
        return None
    cols: dict[int, np.ndarray] = {}

    def col(a: int) -> np.ndarray:
        got = cols.get(a)
        if got is None:
            got = cols[a] = _invisible_column(cache, a, region.min_y, region.max_y)
        return got

    for x in range(lo, hi + 1):
        window = col(x)
        for dx in range(1, size):
            window = window & col(x + dx)
        if not window.any():
            continue
        run = window[: span - size + 1]
        for dy in range(1, size):
            run = run & window[dy : span - size + 1 + dy]
        hit = np.flatnonzero(run)
        if hit.size:
            return BlockHit(LatticePoint(x, region.min_y + int(hit[0])), size)
    return None


def find_block(family: PolyFamily, size: int, region: Region, cap: int | None = None) -> BlockHit | None:
    """First (x asc, then y asc) corner of an all-invisible size x size block."""
    _check_cap(region, cap)
    return scan_block_range(family, size, region, region.min_x, region.max_x)


def find_all_blocks(family: PolyFamily, size: int, region: Region, cap: int | None = None) -> list[BlockHit]:
    """Every block corner in the region, in scan order."""
    _check_cap(region, cap)
    if size < 1:
        raise ValueError(f"block size must be >= 1, got {size}")
    cache = ProfileCache(family)
    span = region.max_y - region.min_y + 1
    if span < size:
        return []
    hits: list[BlockHit] = []
    cols: list[np.ndarray] = []
    for x in range(region.min_x, region.max_x - size + 2):
        if not cols:
            cols = [
                _invisible_column(cache, x + dx, region.min_y, region.max_y)
                for dx in range(size)
            ]
        else:
            cols.pop(0)
            cols.append(_invisible_column(cache, x + size - 1, region.min_y, region.max_y))
        window = cols[0]
        for c in cols[1:]:
            window = window & c
        if not window.any():
            continue
        run = window[: span - size + 1]
        for dy in range(1, size):
            run = run & window[dy : span - size + 1 + dy]
        for idx in np.flatnonzero(run):
            hits.append(BlockHit(LatticePoint(x, region.min_y + int(idx)), size))
    return hits


def blocks_to_csv(hits, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["corner_x", "corner_y"])
        for h in hits:
            w.writerow([h.corner.a, h.corner.b])


def radius_to_visible(
    family: PolyFamily,
    origin: LatticePoint,
    max_layers: int = DEFAULT_MAX_LAYERS,
    cache: ProfileCache | None = None,
) -> RadiusResult:
    """Breadth-first layers of {right, up, diagonal} moves until a visible point.

    distance 0 means the origin itself is visible; -1 means no visible
    point within max_layers layers. Layer counting and the visited-set
    discipline follow the search routine this models: distance bumps once
    per frontier, not per edge.
    """
    cache = cache or ProfileCache(family)
    distance = 0
    visited: set[tuple[int, int]] = set()
    queue: list[tuple[int, int]] = [(origin.a, origin.b)]
    while queue and distance <= max_layers:
        next_queue: list[tuple[int, int]] = []
        for xy in queue:
            if xy in visited:
                continue
            visited.add(xy)
            x, y = xy
            if cache.is_visible(x, y):
                return RadiusResult(origin, distance)
            next_queue.extend(((x + 1, y), (x, y + 1), (x + 1, y + 1)))
        queue = next_queue
        distance += 1
    return RadiusResult(origin, -1)


def find_point_with_radius(
    family: PolyFamily, region: Region, r: int, cap: int | None = None
) -> LatticePoint | None:
    """First point in scan order whose radius_to_visible is exactly r."""
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    _check_cap(region, cap)
    cache = ProfileCache(family)
    for i in range(region.min_x, region.max_x + 1):
        for j in range(region.min_y, region.max_y + 1):
            got = radius_to_visible(family, LatticePoint(i, j), max_layers=r, cache=cache)
            if got.distance == r:
                return LatticePoint(i, j)
    return None


# The 2x2 invisible-block survey bundled for the `reproduce` command: one row
# per quadratic family A*x^2 + B*x, with the reported lower-left corner or
# None when the [1,1000]^2 search came up empty. Rows 11 and 12 as shipped do
# not re-verify (the corners are visible points); the nearest true corners
# are (114, 759) and (21, 440). reproduce reports them as failures.
BLOCK_SURVEY = (
    (1, (1, 1), (13, 195)),
    (2, (2, 5), (14, 825)),
    (3, (3, 2), (25, 1000)),
    (4, (5, 1), (147, 1196)),
    (5, (7, 5), (15, 4575)),
    (6, (2, 7), (69, 1449)),
    (7, (4, 9), None),
    (8, (2, 3), (30, 650)),
    (9, (3, 5), (20, 4250)),
    (10, (4, 4), (13, 195)),
    (11, (1, 18), (116, 759)),
    (12, (1, 14), (23, 440)),
    (13, (4, 5), None),
    (14, (2, 11), None),
    (15, (12, 12), (13, 195)),
)


def survey_family(a_coeff: int, b_coeff: int) -> PolyFamily:
    """Quadratic A,B row as a content-normalized family."""
    return parse_family(f"{a_coeff},{b_coeff}", normalize=True)
