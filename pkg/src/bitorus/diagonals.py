"""Diagonal orbits of the folded grid and their parallel groups.

A diagonal is an orbit of the step right-then-down; every cell lies on
exactly one.  Two diagonals are parallel when some power of the right
bijection maps one onto the other; parallel diagonals have equal length
and identical boundary profiles, so only the number of up-oriented
members of each parallel group matters when searching for Hamiltonian
orientations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InconsistencyError
from .surface import Cell, GridParams, diag_successor_indices

# Grids up to this many cells are counted with a plain visited walk;
# larger ones walk the same orbits run by run.
_RUN_WALK_THRESHOLD = 20_000


@dataclass(frozen=True)
class BoundaryProfile:
    """How many of a diagonal's cells lie on each boundary half."""

    cnt_a: int
    cnt_b: int
    cnt_c: int
    cnt_d: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.cnt_a, self.cnt_b, self.cnt_c, self.cnt_d)


@dataclass
class Diagonal:
    id: int
    cells: tuple[Cell, ...]
    profile: BoundaryProfile
    group_id: int


@dataclass
class DiagonalDecomposition:
    grid: GridParams
    diagonals: list[Diagonal]
    groups: list[tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.diagonals)


def profile(grid: GridParams, cells) -> BoundaryProfile:
    """Count cells of one diagonal on boundaries A, B, C and D."""
    n, m = grid.n, grid.m
    last_col = grid.cols - 1
    a = b = c = d = 0
    for row, col in cells:
        if row == 0:
            if col < m:
                a += 1
            else:
                b += 1
        if col == last_col:
            if row < n:
                c += 1
            else:
                d += 1
    return BoundaryProfile(a, b, c, d)


def _orbits(grid: GridParams) -> tuple[list[list[int]], list[int]]:
    """Orbit partition as flat indices plus the cell -> orbit id table.

    Scanning starts in row-major order, so each orbit is discovered at
    its row-major-minimal cell and orbit ids follow that order.
    """
    succ = diag_successor_indices(grid).tolist()
    size = grid.size
    orbit_id = [-1] * size
    orbits: list[list[int]] = []
    for start in range(size):
        if orbit_id[start] >= 0:
            continue
        oid = len(orbits)
        members = []
        i = start
        while orbit_id[i] < 0:
            orbit_id[i] = oid
            members.append(i)
            i = succ[i]
        orbits.append(members)
    return orbits, orbit_id


def _parallel(grid: GridParams, members_x, members_y, orbit_id, target: int) -> bool:
    """Is some right-shift of orbit x exactly orbit y?

    The right bijection has order dividing 4m, so shifts i = 1..4m are
    exhaustive.  A shift maps x onto y as soon as every shifted cell of
    x lands in y: the shift is injective and the orbits have equal size.
    """
    if len(members_x) != len(members_y):
        return False
    n = grid.n
    rows, cols = grid.rows, grid.cols
    first = members_x[0]
    r0, c0 = divmod(first, cols)
    for i in range(1, 2 * cols + 1):
        wraps, c1 = divmod(c0 + i, cols)
        probe = ((r0 + n * wraps) % rows) * cols + c1
        if orbit_id[probe] != target:
            continue
        for idx in members_x:
            r, c = divmod(idx, cols)
            w, cc = divmod(c + i, cols)
            if orbit_id[((r + n * w) % rows) * cols + cc] != target:
                break
        else:
            return True
    return False


def _block_cross_check(grid: GridParams, orbit_id, group_of) -> None:
    """Validate groups against the 1 x g blocks at each quadrant corner.

    The g cells of each block must hit g distinct diagonals that the
    parallel relation put in a single group, and the four blocks must
    reach every diagonal.
    """
    g = grid.g
    n, m = grid.n, grid.m
    covered = set()
    for top, left in ((0, 0), (0, m), (n, 0), (n, m)):
        ids = [orbit_id[top * grid.cols + left + j] for j in range(g)]
        if len(set(ids)) != g:
            raise InconsistencyError(
                f"corner block of grid ({n},{m}) hits {len(set(ids))} diagonals, expected {g}"
            )
        if len({group_of[i] for i in ids}) != 1:
            raise InconsistencyError(
                f"corner block of grid ({n},{m}) spans multiple parallel groups"
            )
        covered.update(ids)
    if len(covered) != max(orbit_id) + 1:
        raise InconsistencyError(
            f"corner blocks of grid ({n},{m}) miss some diagonals"
        )


def decompose(grid: GridParams) -> DiagonalDecomposition:
    """Partition the grid into diagonals and group parallel ones."""
    orbits, orbit_id = _orbits(grid)
    count = len(orbits)
    if count > 4 * grid.g:
        raise InconsistencyError(
            f"grid ({grid.n},{grid.m}) produced {count} diagonals, more than 4*gcd"
        )

    # Union parallel pairs; sizes differ between groups but never inside one.
    group_of = list(range(count))

    def find(x: int) -> int:
        while group_of[x] != x:
            group_of[x] = group_of[group_of[x]]
            x = group_of[x]
        return x

    for x in range(count):
        for y in range(x + 1, count):
            if find(x) == find(y):
                continue
            if _parallel(grid, orbits[x], orbits[y], orbit_id, y):
                group_of[find(y)] = find(x)
    roots = [find(x) for x in range(count)]
    _block_cross_check(grid, orbit_id, roots)

    order = sorted(set(roots))
    group_index = {root: k for k, root in enumerate(order)}
    groups = [
        tuple(x for x in range(count) if roots[x] == root) for root in order
    ]

    cols = grid.cols
    diagonals = []
    for oid, members in enumerate(orbits):
        cells = tuple(divmod(i, cols) for i in members)
        diagonals.append(
            Diagonal(
                id=oid,
                cells=cells,
                profile=profile(grid, cells),
                group_id=group_index[roots[oid]],
            )
        )

    for group in groups:
        profiles = {diagonals[x].profile.as_tuple() for x in group}
        if len(profiles) != 1:
            raise InconsistencyError(
                f"parallel group {group} of grid ({grid.n},{grid.m}) mixes boundary profiles"
            )

    return DiagonalDecomposition(grid=grid, diagonals=diagonals, groups=groups)


def _orbit_count_runs(grid: GridParams) -> int:
    """Orbit count walking the same successor map run by run.

    Interior diagonal steps are forced (+1, +1), so an orbit is a cyclic
    sequence of straight runs, each starting on the top row or the left
    column right after a wrap.  Jumping run ends in O(1) makes the walk
    O(n + m) while still enumerating every orbit of the successor map.
    """
    n, m = grid.n, grid.m
    rows, cols = grid.rows, grid.cols
    starts = [(0, c) for c in range(cols)] + [(r, 0) for r in range(1, rows)]
    visited = set()
    count = 0
    budget = len(starts)
    for start in starts:
        if start in visited:
            continue
        count += 1
        cur = start
        while True:
            visited.add(cur)
            budget -= 1
            if budget < 0:
                raise InconsistencyError("run walk revisited a run start")
            r, c = cur
            k = min(rows - 1 - r, cols - 1 - c)
            r += k
            c += k
            if c == cols - 1:
                r2 = (r + n) % rows
                cur = (r2 + 1, 0) if r2 < rows - 1 else (0, m)
            else:
                cur = (0, (c + 1 + m) % cols)
            if cur == start:
                break
    return count


@lru_cache(maxsize=None)
def diag_count_naive(n: int, m: int) -> int:
    """Number of diagonals, by direct orbit enumeration.

    This is the reference count the faster methods are checked against.
    Small grids walk cell by cell; large ones walk the identical orbits
    run by run.
    """
    grid = GridParams(n, m)
    if grid.size > _RUN_WALK_THRESHOLD:
        return _orbit_count_runs(grid)
    succ = diag_successor_indices(grid).tolist()
    seen = bytearray(grid.size)
    count = 0
    for start in range(grid.size):
        if seen[start]:
            continue
        count += 1
        i = start
        while not seen[i]:
            seen[i] = 1
            i = succ[i]
    return count
