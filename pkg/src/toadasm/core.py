"""Ground types: permutations, alternating sign matrices, diamond geometry.

Everything downstream builds on the values defined here.  All types are
immutable after construction and all functions are pure, so they are safe
to share freely between threads.

Conventions used throughout the package:

* Matrix indices are 1-based in user-facing text and in the (i, j)
  positions exchanged between modules; internal storage is plain 0-based
  tuples.
* The order-n diamond board is the set of unit cells (x, y) -- meaning the
  square [x, x+1] x [y, y+1] -- with |2x+1| + |2y+1| <= 2n.  Its lattice
  points carry two interleaved square grids of vertices: a larger
  (n+1) x (n+1) grid and a smaller n x n grid, mapped to the lattice by the
  affine maps in :class:`VertexId`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

Cell = tuple[int, int]
IntGrid = tuple[tuple[int, ...], ...]


class NotPermutationMatrix(ValueError):
    """The operation needs a -1-free ASM (a permutation matrix)."""


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n} stored as its one-line word sigma(1..n)."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if len(word) < 1:
            raise ValueError("permutation must have size >= 1")
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of 1..{len(word)}: {word!r}")

    @property
    def size(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of i, 1-based."""
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def reverse(self) -> "Permutation":
        """Word read right to left."""
        return Permutation(tuple(reversed(self.word)))

    def complement(self) -> "Permutation":
        """Each value v replaced by n+1-v."""
        n = self.size
        return Permutation(tuple(n + 1 - v for v in self.word))

    def __str__(self) -> str:
        return format_permutation(self)


def all_permutations(n: int) -> Iterator[Permutation]:
    """All permutations of {1..n} in lexicographic order of the word."""
    if n < 1:
        raise ValueError("size must be >= 1")
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


# ---------------------------------------------------------------------------
# alternating sign matrices


def validate_asm(entries: Iterable[Iterable[int]]) -> str | None:
    """Verdict on the two ASM axioms; None when valid.

    Total on any square integer grid: entries outside {-1, 0, 1}, bad row
    lengths, broken sums and broken sign alternation all come back as a
    message naming the first offending row or column.  Both axioms are
    checked through prefix sums: a line satisfies them exactly when every
    prefix sum lies in {0, 1} and the full sum is 1.
    """
    rows = [tuple(r) for r in entries]
    n = len(rows)
    for i, row in enumerate(rows, start=1):
        if len(row) != n:
            return f"row {i}: length {len(row)} != order {n}"
        for e in row:
            if e not in (-1, 0, 1):
                return f"row {i}: entry {e} outside {{-1, 0, 1}}"
    for i, row in enumerate(rows, start=1):
        if sum(row) != 1:
            return f"row {i}: entries sum to {sum(row)}, expected 1"
        total = 0
        for e in row:
            total += e
            if total not in (0, 1):
                return f"row {i}: nonzero entries do not alternate +1, -1, ..., +1"
    for j in range(n):
        column = [rows[i][j] for i in range(n)]
        if sum(column) != 1:
            return f"column {j + 1}: entries sum to {sum(column)}, expected 1"
        total = 0
        for e in column:
            total += e
            if total not in (0, 1):
                return f"column {j + 1}: nonzero entries do not alternate +1, -1, ..., +1"
    return None


@dataclass(frozen=True)
class AsmMatrix:
    """Square matrix over {-1, 0, 1} with row/column sums 1 and alternating
    signs.  The -1-free ones are exactly the permutation matrices.

    The empty order-0 matrix is allowed; it arises as the smaller partner of
    the one-element permutation matrix.
    """

    entries: IntGrid

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        problem = validate_asm(entries)
        if problem is not None:
            raise ValueError(f"not an ASM: {problem}")

    @property
    def order(self) -> int:
        return len(self.entries)

    def entry(self, i: int, j: int) -> int:
        """Entry at row i, column j, 1-based."""
        return self.entries[i - 1][j - 1]

    @property
    def is_permutation_matrix(self) -> bool:
        return all(e != -1 for row in self.entries for e in row)

    def negative_count(self) -> int:
        """Number of -1 entries (the k of the 2^k fiber law)."""
        return sum(row.count(-1) for row in self.entries)

    def __str__(self) -> str:
        return format_asm(self)


def perm_to_matrix(p: Permutation) -> AsmMatrix:
    """Permutation matrix with the 1 of row i in column p(i)."""
    n = p.size
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        row[p(i) - 1] = 1
        rows.append(tuple(row))
    return AsmMatrix(tuple(rows))


def matrix_to_perm(m: AsmMatrix) -> Permutation:
    """Inverse of :func:`perm_to_matrix`.

    Raises NotPermutationMatrix when the matrix contains a -1.
    """
    if not m.is_permutation_matrix:
        raise NotPermutationMatrix("matrix contains -1 entries")
    if m.order < 1:
        raise ValueError("order-0 matrix has no permutation word")
    return Permutation(tuple(row.index(1) + 1 for row in m.entries))


# ---------------------------------------------------------------------------
# diamond geometry


def in_diamond(cell: Cell, n: int) -> bool:
    """Whether unit cell (x, y) belongs to the order-n diamond."""
    x, y = cell
    return abs(2 * x + 1) + abs(2 * y + 1) <= 2 * n


def column_rows(n: int, x: int) -> range:
    """Rows y with cell (x, y) inside the order-n diamond (empty when none)."""
    reach = 2 * n - abs(2 * x + 1)
    if reach < 0:
        return range(0)
    return range(-(reach + 1) // 2, (reach - 1) // 2 + 1)


@lru_cache(maxsize=None)
def diamond_cells(n: int) -> frozenset[Cell]:
    """All 2n(n+1) cells of the order-n diamond."""
    if n < 1:
        raise ValueError("diamond order must be >= 1")
    return frozenset((x, y) for x in range(-n, n) for y in column_rows(n, x))


@lru_cache(maxsize=None)
def corner_points(n: int) -> frozenset[tuple[int, int]]:
    """The four extreme lattice points; each carries a drawn spur that adds
    one to its vertex degree."""
    return frozenset({(n, 0), (-n, 0), (0, n), (0, -n)})


class GridKind(Enum):
    LARGER = "larger"
    SMALLER = "smaller"


@dataclass(frozen=True)
class VertexId:
    """Index (a, b) into one of the two interleaved vertex grids.

    For an order-n board the larger grid is (a, b) in [0..n]^2 at lattice
    point (a-b, a+b-n), and the smaller grid is (a, b) in [0..n-1]^2 at
    (a-b, a+b-(n-1)).  Row a of a grid corresponds to matrix row a+1.
    """

    grid: GridKind
    a: int
    b: int

    def in_range(self, n: int) -> bool:
        hi = n if self.grid is GridKind.LARGER else n - 1
        return 0 <= self.a <= hi and 0 <= self.b <= hi

    def lattice_point(self, n: int) -> tuple[int, int]:
        shift = n if self.grid is GridKind.LARGER else n - 1
        return (self.a - self.b, self.a + self.b - shift)


# ---------------------------------------------------------------------------
# text formats


def format_permutation(p: Permutation) -> str:
    """Compact digit string for n <= 9, space-separated otherwise."""
    if p.size <= 9:
        return "".join(str(v) for v in p.word)
    return " ".join(str(v) for v in p.word)


def parse_permutation(text: str) -> Permutation:
    """Accepts both the compact and the space-separated form."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty permutation text")
    if len(tokens) == 1 and len(tokens[0]) > 1:
        if not tokens[0].isdigit():
            raise ValueError(f"bad permutation word {text!r}")
        values = tuple(int(ch) for ch in tokens[0])
    else:
        try:
            values = tuple(int(tok) for tok in tokens)
        except ValueError:
            raise ValueError(f"bad permutation word {text!r}") from None
    return Permutation(values)


def format_asm(m: AsmMatrix) -> str:
    """Header line ``asm <n>`` followed by n rows of space-separated entries."""
    lines = [f"asm {m.order}"]
    lines.extend(" ".join(str(e) for e in row) for row in m.entries)
    return "\n".join(lines)


def parse_asm(text: str) -> AsmMatrix:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty ASM text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "asm":
        raise ValueError(f"bad ASM header {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"bad ASM header {lines[0]!r}") from None
    if n < 0:
        raise ValueError(f"bad ASM order {n}")
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        try:
            rows.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ValueError(f"bad ASM row {line!r}") from None
    return AsmMatrix(tuple(rows))
