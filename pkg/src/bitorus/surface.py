"""The folded grid: a 2n x 2m directed grid glued into a two-holed torus.

A genus-2 surface is obtained from a rectangle by splitting each side into
two segments and gluing each segment to the diametrically opposite one.
For the grid this yields "half-shift" wrap rules, with rows counted from
the top and columns from the left:

* moving up from row 0 lands on row 2n-1 with the column shifted by m
  (mod 2m);
* moving right from column 2m-1 lands on column 0 with the row shifted
  by n (mod 2n).

Both shifts are involutions (m doubled is 2m, n doubled is 2n), which is
what makes the four boundary gluings consistent.  Every cell has one up
and one right out-edge; `step` realises these bijections and their
inverses.

The boundary halves are labelled A (top row, left half), B (top row,
right half), C (right column, top half) and D (right column, bottom
half).  The single corner cell (0, 2m-1) lies on both B and C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

Cell = tuple[int, int]

UP = "U"
RIGHT = "R"
UP_INV = "U_inv"
RIGHT_INV = "R_inv"
MOVES = (UP, RIGHT, UP_INV, RIGHT_INV)

QUADRANTS = ("TL", "TR", "BL", "BR")


@dataclass(frozen=True)
class GridParams:
    """Grid sizes: quadrants are n x m, the full grid is 2n x 2m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"grid sizes must be positive, got ({self.n}, {self.m})")

    @property
    def g(self) -> int:
        return math.gcd(self.n, self.m)

    @property
    def rows(self) -> int:
        return 2 * self.n

    @property
    def cols(self) -> int:
        return 2 * self.m

    @property
    def size(self) -> int:
        """Number of cells, 4nm."""
        return self.rows * self.cols

    def check_cell(self, cell: Cell) -> None:
        row, col = cell
        if not (0 <= row < self.rows and 0 <= col < self.cols):
            raise ValueError(f"cell {cell} outside {self.rows}x{self.cols} grid")

    def cells(self):
        """All cells in row-major order."""
        for row in range(self.rows):
            for col in range(self.cols):
                yield (row, col)


@dataclass(frozen=True)
class BoundaryClass:
    on_a: bool
    on_b: bool
    on_c: bool
    on_d: bool
    quadrant: str


def step(grid: GridParams, cell: Cell, move: str) -> Cell:
    """Apply one of the four edge bijections to a cell."""
    grid.check_cell(cell)
    row, col = cell
    rows, cols = grid.rows, grid.cols
    if move == UP:
        if row > 0:
            return (row - 1, col)
        return (rows - 1, (col + grid.m) % cols)
    if move == UP_INV:
        if row < rows - 1:
            return (row + 1, col)
        return (0, (col + grid.m) % cols)
    if move == RIGHT:
        if col < cols - 1:
            return (row, col + 1)
        return ((row + grid.n) % rows, 0)
    if move == RIGHT_INV:
        if col > 0:
            return (row, col - 1)
        return ((row + grid.n) % rows, cols - 1)
    raise ValueError(f"unknown move {move!r}")


def classify(grid: GridParams, cell: Cell) -> BoundaryClass:
    """Boundary membership flags and quadrant of a cell."""
    grid.check_cell(cell)
    row, col = cell
    n, m = grid.n, grid.m
    quadrant = ("T" if row < n else "B") + ("L" if col < m else "R")
    return BoundaryClass(
        on_a=row == 0 and col < m,
        on_b=row == 0 and col >= m,
        on_c=col == grid.cols - 1 and row < n,
        on_d=col == grid.cols - 1 and row >= n,
        quadrant=quadrant,
    )


def diag_successor(grid: GridParams, cell: Cell) -> Cell:
    """One diagonal step: right, then down (the inverse of up)."""
    return step(grid, step(grid, cell, RIGHT), UP_INV)


def cell_index(grid: GridParams, cell: Cell) -> int:
    return cell[0] * grid.cols + cell[1]


def index_cell(grid: GridParams, idx: int) -> Cell:
    return divmod(idx, grid.cols)


def right_power(grid: GridParams, cell: Cell, i: int) -> Cell:
    """Apply the right bijection i >= 0 times in O(1).

    Each pass over the right boundary shifts the row by n, and the
    number of passes is (col + i) // 2m.
    """
    row, col = cell
    wraps, col2 = divmod(col + i, grid.cols)
    return ((row + grid.n * wraps) % grid.rows, col2)


def _flat_coords(grid: GridParams):
    idx = np.arange(grid.size)
    return idx // grid.cols, idx % grid.cols


def diag_successor_indices(grid: GridParams) -> np.ndarray:
    """Flat-index table of the diagonal step for every cell."""
    n, m = grid.n, grid.m
    rows, cols = grid.rows, grid.cols
    r0, c0 = _flat_coords(grid)
    wrap_right = c0 == cols - 1
    r1 = np.where(wrap_right, (r0 + n) % rows, r0)
    c1 = np.where(wrap_right, 0, c0 + 1)
    wrap_down = r1 == rows - 1
    r2 = np.where(wrap_down, 0, r1 + 1)
    c2 = np.where(wrap_down, (c1 + m) % cols, c1)
    return r2 * cols + c2


def up_indices(grid: GridParams) -> np.ndarray:
    """Flat-index table of the up bijection for every cell."""
    n, m = grid.n, grid.m
    rows, cols = grid.rows, grid.cols
    r0, c0 = _flat_coords(grid)
    wrap = r0 == 0
    r1 = np.where(wrap, rows - 1, r0 - 1)
    c1 = np.where(wrap, (c0 + m) % cols, c0)
    return r1 * cols + c1


def right_indices(grid: GridParams) -> np.ndarray:
    """Flat-index table of the right bijection for every cell."""
    n = grid.n
    rows, cols = grid.rows, grid.cols
    r0, c0 = _flat_coords(grid)
    wrap = c0 == cols - 1
    r1 = np.where(wrap, (r0 + n) % rows, r0)
    c1 = np.where(wrap, 0, c0 + 1)
    return r1 * cols + c1
