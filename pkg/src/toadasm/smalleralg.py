"""The smaller ASM compatible with a permutation matrix, built directly.

Given a permutation matrix B of order n+1, the order-n partner A is
determined entry by entry:

1. zero mask -- A(i, j) is forced to zero when one of four rays is clear:
   the paired columns j, j+1 of B hold no 1 at or above row i, or none
   below row i; or the paired rows i, i+1 hold no 1 at or left of column
   j, or none right of column j.
2. boxes -- the entries not forced to zero.  Equivalently (and this is the
   form the code cross-checks): (i, j) is a box exactly when the 1s of
   rows i, i+1 straddle the gap between columns j and j+1 *and* the 1s of
   columns j, j+1 straddle the gap between rows i and i+1.
3. windmill classes -- around a box sit four nearest 1s, one per adjacent
   row and column of B.  They wind around the box (windmilled) or not, and
   windmilled boxes get -1 while non-windmilled ones get +1.

The windmill predicate used here is a closed form derived from the two
four-1s configurations: with p the word and q its inverse, box (i, j) is
windmilled iff

    (p(i) > j) == (q(j) <= i)

i.e. row i's 1 lies right of the box exactly when column j's 1 lies at or
above it.  Both straddle conditions hold at a box, so this single
comparison separates the two configurations; the tests validate it
exhaustively against the tiling fibers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import AsmMatrix, NotPermutationMatrix, Permutation, perm_to_matrix


class BoxClass(Enum):
    NON_WINDMILLED = "non-windmilled"
    WINDMILLED = "windmilled"


class NotABox(ValueError):
    """The position is forced to zero, so it has no windmill class."""


def zero_mask(b: AsmMatrix) -> tuple[tuple[bool, ...], ...]:
    """n x n grid of forced-zero flags for an order-(n+1) permutation matrix.

    Each of the four ray conditions is an emptiness test on a prefix or
    suffix of a row pair or column pair; cumulative counts of 1s give all
    of them in O(n^2) total.
    """
    if not b.is_permutation_matrix:
        raise NotPermutationMatrix("zero mask is defined for permutation matrices")
    m = b.order
    n = m - 1
    rows = b.entries
    # col_pref[j][i] = number of 1s in column j at rows < i (0-based)
    col_pref = [[0] * (m + 1) for _ in range(m)]
    row_pref = [[0] * (m + 1) for _ in range(m)]
    for i in range(m):
        for j in range(m):
            col_pref[j][i + 1] = col_pref[j][i] + (rows[i][j] == 1)
            row_pref[i][j + 1] = row_pref[i][j] + (rows[i][j] == 1)
    mask = []
    for i in range(n):
        flags = []
        for j in range(n):
            above = col_pref[j][i + 1] + col_pref[j + 1][i + 1]
            total_cols = col_pref[j][m] + col_pref[j + 1][m]
            left = row_pref[i][j + 1] + row_pref[i + 1][j + 1]
            total_rows = row_pref[i][m] + row_pref[i + 1][m]
            forced = (
                above == 0
                or total_cols - above == 0
                or left == 0
                or total_rows - left == 0
            )
            flags.append(forced)
        mask.append(tuple(flags))
    return tuple(mask)


def box_positions_closed_form(p: Permutation) -> frozenset[tuple[int, int]]:
    """Box positions of the size-(n+1) word p as 1-based (i, j) pairs.

    Direct straddle test on the word, independent of the matrix scan in
    :func:`zero_mask`: a clear ray exists exactly when the corresponding
    straddle fails, so the two computations are complementary.
    """
    n = p.size - 1
    q = p.inverse()
    boxes = set()
    for i in range(1, n + 1):
        row_lo, row_hi = sorted((p(i), p(i + 1)))
        for j in range(row_lo, row_hi):
            col_lo, col_hi = sorted((q(j), q(j + 1)))
            if col_lo <= i < col_hi:
                boxes.add((i, j))
    return frozenset(boxes)


def _windmilled(p: Permutation, q: Permutation, i: int, j: int) -> bool:
    return (p(i) > j) == (q(j) <= i)


def classify_box(p: Permutation, i: int, j: int) -> BoxClass:
    """Windmill class of box (i, j); raises NotABox off the box set."""
    if (i, j) not in box_positions_closed_form(p):
        raise NotABox(f"({i}, {j}) is not a box of {p}")
    if _windmilled(p, p.inverse(), i, j):
        return BoxClass.WINDMILLED
    return BoxClass.NON_WINDMILLED


@dataclass(frozen=True)
class BoxGrid:
    """Marks for every entry of the smaller matrix: positions not in
    ``boxes`` are forced zeros; ``windmilled`` holds the boxes that will
    receive -1."""

    order: int
    boxes: frozenset[tuple[int, int]]
    windmilled: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not self.windmilled <= self.boxes:
            raise ValueError("windmilled positions must be boxes")
        # every nonempty row holds an odd number of boxes, alternating
        # non-windmilled / windmilled / ... from the left
        for i in range(1, self.order + 1):
            row = sorted(j for (bi, j) in self.boxes if bi == i)
            if row and len(row) % 2 == 0:
                raise ValueError(f"row {i} holds an even number of boxes")
            for pos, j in enumerate(row):
                if ((i, j) in self.windmilled) != (pos % 2 == 1):
                    raise ValueError(f"row {i} breaks the windmill alternation")

    def is_box(self, i: int, j: int) -> bool:
        return (i, j) in self.boxes

    def box_class(self, i: int, j: int) -> BoxClass:
        if (i, j) not in self.boxes:
            raise NotABox(f"({i}, {j}) is forced to zero")
        if (i, j) in self.windmilled:
            return BoxClass.WINDMILLED
        return BoxClass.NON_WINDMILLED


def box_grid(p: Permutation) -> BoxGrid:
    """Marks from the zero mask of p's matrix, classes from the windmill
    predicate."""
    n = p.size - 1
    mask = zero_mask(perm_to_matrix(p))
    boxes = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if not mask[i - 1][j - 1]
    )
    q = p.inverse()
    windmilled = frozenset(pos for pos in boxes if _windmilled(p, q, *pos))
    return BoxGrid(n, boxes, windmilled)


def smaller_asm(p: Permutation) -> AsmMatrix:
    """The unique order-n ASM compatible with the size-(n+1) permutation
    matrix of p.  A size-1 word yields the empty order-0 matrix."""
    n = p.size - 1
    grid = box_grid(p)
    entries = tuple(
        tuple(
            (-1 if (i, j) in grid.windmilled else 1) if (i, j) in grid.boxes else 0
            for j in range(1, n + 1)
        )
        for i in range(1, n + 1)
    )
    _assert_alternation(entries)
    return AsmMatrix(entries)


def _assert_alternation(entries: tuple[tuple[int, ...], ...]) -> None:
    """Nonzeros of every row and column alternate +1, -1, ..., +1.  This is
    guaranteed by the windmill fill; checked here on its own before the full
    ASM validation so a failure points at the construction."""
    n = len(entries)
    lines = list(entries) + [tuple(row[j] for row in entries) for j in range(n)]
    for line in lines:
        signs = [e for e in line if e]
        if not signs:
            continue
        expected = 1
        for s in signs:
            if s != expected:
                raise AssertionError(f"sign fill broke alternation in {line}")
            expected = -expected
        if signs[-1] != 1:
            raise AssertionError(f"sign fill did not end on +1 in {line}")
