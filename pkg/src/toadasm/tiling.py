"""Domino tilings of the diamond board and their matrix-pair structure.

A tiling is read off as a pair of alternating sign matrices by counting,
at every vertex of the two interleaved grids, how many unit edges of the
drawing meet there.  An edge is drawn when it lies on the region boundary
or when the two cells flanking it belong to different dominoes; the four
extreme corner points additionally carry a spur that contributes one more
edge.  Every vertex then meets 2, 3 or 4 edges:

* smaller grid: 2 edges -> +1, 3 edges -> 0, 4 edges -> -1
* larger grid:  2 edges -> -1, 3 edges -> 0, 4 edges -> +1

The inverse direction -- recovering the tiling that realizes a given
matrix pair -- is a backtracking placement search pruned by the degree
each vertex is still able to reach.  The count of all tilings is computed
independently of any enumeration by a profile dynamic program over
columns with a bitmask frontier.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .core import (
    AsmMatrix,
    Cell,
    VertexId,
    column_rows,
    corner_points,
    diamond_cells,
)


class InvalidVertex(ValueError):
    """Vertex index outside the grids of the tiling's order."""


class IncompatiblePair(ValueError):
    """No tiling realizes the given matrix pair."""


class AmbiguousPair(RuntimeError):
    """A matrix pair admitted two distinct tilings.  Compatible pairs
    determine their tiling uniquely, so this firing means a bug."""


@dataclass(frozen=True, eq=True)
class Domino:
    """One 2x1 piece: ``H`` covers (x, y) and (x+1, y), ``V`` covers (x, y)
    and (x, y+1)."""

    orientation: str
    x: int
    y: int

    def __post_init__(self) -> None:
        if self.orientation not in ("H", "V"):
            raise ValueError(f"orientation must be 'H' or 'V', got {self.orientation!r}")
        # enumeration builds millions of frozensets over a fixed pool of
        # dominoes; precomputing the hash pays for itself there
        object.__setattr__(self, "_hash", hash((self.orientation, self.x, self.y)))

    def __hash__(self) -> int:
        return self._hash

    def cells(self) -> tuple[Cell, Cell]:
        if self.orientation == "H":
            return ((self.x, self.y), (self.x + 1, self.y))
        return ((self.x, self.y), (self.x, self.y + 1))

    def sort_key(self) -> tuple[int, int, str]:
        return (self.y, self.x, self.orientation)


@dataclass(frozen=True)
class Tiling:
    """A perfect cover of the order-n diamond by n(n+1) dominoes."""

    order: int
    dominoes: frozenset[Domino]

    def __post_init__(self) -> None:
        object.__setattr__(self, "dominoes", frozenset(self.dominoes))
        board = diamond_cells(self.order)
        seen: set[Cell] = set()
        for d in self.dominoes:
            for c in d.cells():
                if c not in board:
                    raise ValueError(f"cell {c} outside the order-{self.order} diamond")
                if c in seen:
                    raise ValueError(f"cell {c} covered twice")
                seen.add(c)
        if seen != board:
            missing = min(board - seen)
            raise ValueError(f"cell {missing} not covered")

    @classmethod
    def _trusted(cls, order: int, dominoes: frozenset[Domino]) -> "Tiling":
        """Skip cover validation for tilings the search itself assembled."""
        t = object.__new__(cls)
        object.__setattr__(t, "order", order)
        object.__setattr__(t, "dominoes", dominoes)
        return t

    @cached_property
    def cell_owner(self) -> dict[Cell, Domino]:
        return {c: d for d in self.dominoes for c in d.cells()}


@dataclass(frozen=True)
class CompatiblePair:
    """An order-n and order-(n+1) ASM bundled with the tiling relating them."""

    smaller: AsmMatrix
    larger: AsmMatrix
    witness: Tiling

    def __post_init__(self) -> None:
        if asm_pair_from_tiling(self.witness) != (self.smaller, self.larger):
            raise ValueError("witness tiling does not produce the given pair")

    @classmethod
    def from_tiling(cls, t: Tiling) -> "CompatiblePair":
        smaller, larger = asm_pair_from_tiling(t)
        return cls(smaller, larger, t)

    @classmethod
    def from_matrices(cls, smaller: AsmMatrix, larger: AsmMatrix) -> "CompatiblePair":
        return cls(smaller, larger, tiling_from_asm_pair(smaller, larger))


# ---------------------------------------------------------------------------
# vertex degrees and pair extraction


def _edge_flanks(px: int, py: int) -> tuple[tuple[Cell, Cell], ...]:
    """The four unit edges at lattice point (px, py), each as its pair of
    flanking cells (up, right, down, left)."""
    return (
        ((px - 1, py), (px, py)),
        ((px, py - 1), (px, py)),
        ((px - 1, py - 1), (px, py - 1)),
        ((px - 1, py - 1), (px - 1, py)),
    )


def _degree_at(point: tuple[int, int], owner: dict[Cell, Domino], spurs: frozenset) -> int:
    deg = 1 if point in spurs else 0
    for c1, c2 in _edge_flanks(*point):
        d1 = owner.get(c1)
        d2 = owner.get(c2)
        if d1 is not None and d2 is not None:
            if d1 is not d2:
                deg += 1
        elif d1 is not None or d2 is not None:
            deg += 1
    return deg


def vertex_degree(t: Tiling, v: VertexId) -> int:
    """Number of drawn edges meeting the vertex (2, 3 or 4)."""
    if not v.in_range(t.order):
        raise InvalidVertex(f"{v} out of range for order {t.order}")
    return _degree_at(v.lattice_point(t.order), t.cell_owner, corner_points(t.order))


_SMALLER_ENTRY = {3: 0, 2: 1, 4: -1}
_LARGER_ENTRY = {3: 0, 2: -1, 4: 1}


def asm_pair_from_tiling(t: Tiling) -> tuple[AsmMatrix, AsmMatrix]:
    """The (order-n, order-(n+1)) ASM pair read off the tiling's vertex
    degrees."""
    n = t.order
    owner = t.cell_owner
    spurs = corner_points(n)
    larger = tuple(
        tuple(_LARGER_ENTRY[_degree_at((a - b, a + b - n), owner, spurs)] for b in range(n + 1))
        for a in range(n + 1)
    )
    smaller = tuple(
        tuple(_SMALLER_ENTRY[_degree_at((a - b, a + b - n + 1), owner, spurs)] for b in range(n))
        for a in range(n)
    )
    return AsmMatrix(smaller), AsmMatrix(larger)


# ---------------------------------------------------------------------------
# pair -> tiling reconstruction


def _degree_targets(smaller: AsmMatrix, larger: AsmMatrix) -> dict[tuple[int, int], int]:
    n = smaller.order
    targets: dict[tuple[int, int], int] = {}
    to_degree_larger = {-1: 2, 0: 3, 1: 4}
    to_degree_smaller = {1: 2, 0: 3, -1: 4}
    for a in range(n + 1):
        for b in range(n + 1):
            targets[(a - b, a + b - n)] = to_degree_larger[larger.entries[a][b]]
    for a in range(n):
        for b in range(n):
            targets[(a - b, a + b - n + 1)] = to_degree_smaller[smaller.entries[a][b]]
    return targets


def tiling_from_asm_pair(smaller: AsmMatrix, larger: AsmMatrix) -> Tiling:
    """The unique tiling whose extraction yields the given pair.

    Backtracking over cells in scan order; after each placement, every
    vertex touching the new domino must still be able to reach its required
    degree (edges already decided count exactly, undecided edges count as a
    free margin).  The search runs to exhaustion so that uniqueness is
    checked, not assumed.

    Raises IncompatiblePair when no tiling realizes the pair, and
    AmbiguousPair if two do (which the theory rules out).
    """
    n = smaller.order
    if n < 1:
        raise ValueError("smaller matrix must have order >= 1")
    if larger.order != n + 1:
        raise ValueError(
            f"orders must be consecutive, got {smaller.order} and {larger.order}"
        )
    board = diamond_cells(n)
    spurs = corner_points(n)
    targets = _degree_targets(smaller, larger)
    cells = sorted(board, key=lambda c: (c[1], c[0]))
    owner: dict[Cell, int] = {}

    def feasible(point: tuple[int, int]) -> bool:
        target = targets.get(point)
        if target is None:
            return True
        low = 1 if point in spurs else 0
        margin = 0
        for c1, c2 in _edge_flanks(*point):
            in1 = c1 in board
            in2 = c2 in board
            if in1 and in2:
                d1 = owner.get(c1)
                d2 = owner.get(c2)
                if d1 is None or d2 is None:
                    margin += 1
                elif d1 != d2:
                    low += 1
            elif in1 or in2:
                low += 1
        return low <= target <= low + margin

    def corners_ok(placed_cells: tuple[Cell, Cell]) -> bool:
        points = set()
        for x, y in placed_cells:
            points.update(((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)))
        return all(feasible(p) for p in points)

    for point in targets:
        if not feasible(point):
            raise IncompatiblePair("a vertex cannot reach its required degree")

    solutions: list[frozenset[Domino]] = []
    placed: list[Domino] = []
    tag = 0

    def search(idx: int) -> None:
        nonlocal tag
        if len(solutions) == 2:
            return
        while idx < len(cells) and cells[idx] in owner:
            idx += 1
        if idx == len(cells):
            solutions.append(frozenset(placed))
            return
        x, y = cells[idx]
        for d in (Domino("H", x, y), Domino("V", x, y)):
            c1, c2 = d.cells()
            if c2 not in board or c2 in owner:
                continue
            tag += 1
            owner[c1] = owner[c2] = tag
            placed.append(d)
            if corners_ok((c1, c2)):
                search(idx + 1)
            placed.pop()
            del owner[c1], owner[c2]

    search(0)
    if not solutions:
        raise IncompatiblePair("no tiling realizes the pair")
    if len(solutions) > 1:
        raise AmbiguousPair("pair admits more than one tiling")
    result = Tiling._trusted(n, solutions[0])
    if asm_pair_from_tiling(result) != (smaller, larger):
        raise AmbiguousPair("search returned a tiling with the wrong extraction")
    return result


def is_compatible(smaller: AsmMatrix, larger: AsmMatrix) -> bool:
    """Whether some tiling relates the two matrices."""
    try:
        tiling_from_asm_pair(smaller, larger)
    except IncompatiblePair:
        return False
    return True


# ---------------------------------------------------------------------------
# enumeration


def enumerate_tilings(n: int, containing: Iterable[Domino] = ()) -> Iterator[Tiling]:
    """Yield every tiling of the order-n diamond exactly once.

    Deterministic order: scan cells by (y, x); at the first uncovered cell
    try the horizontal domino, then the vertical one.  ``containing``
    restricts the stream to tilings that include the given dominoes, so
    workers holding disjoint alternative placements partition the full
    stream and may merge their results in any order.

    Iterative backtracking with an explicit frame stack: a recursive
    generator would funnel each of the 2^{n(n+1)/2} results through one
    ``yield from`` per placement, which dominates the runtime from order
    5 up.
    """
    if n < 1:
        raise ValueError("diamond order must be >= 1")
    board = diamond_cells(n)
    cells = sorted(board, key=lambda c: (c[1], c[0]))
    ncells = len(cells)
    covered: set[Cell] = set()
    seed = tuple(containing)
    for d in seed:
        for c in d.cells():
            if c not in board:
                raise ValueError(f"seed cell {c} outside the diamond")
            if c in covered:
                raise ValueError(f"seed cell {c} covered twice")
            covered.add(c)
    placed: list[Domino] = list(seed)

    # both candidate placements per scan cell, H before V, built once
    options: list[tuple[tuple[Domino, Cell, Cell], ...]] = []
    for x, y in cells:
        opts = []
        for d in (Domino("H", x, y), Domino("V", x, y)):
            c1, c2 = d.cells()
            if c2 in board:
                opts.append((d, c1, c2))
        options.append(tuple(opts))

    def search() -> Iterator[Tiling]:
        def advance(i: int) -> int:
            while i < ncells and cells[i] in covered:
                i += 1
            return i

        start = advance(0)
        if start == ncells:
            yield Tiling._trusted(n, frozenset(placed))
            return
        # frame: [decision cell index, next option to try, placed domino]
        stack: list[list] = [[start, 0, None]]
        while stack:
            frame = stack[-1]
            idx, opt, prev = frame
            if prev is not None:
                covered.discard(prev[1])
                covered.discard(prev[2])
                placed.pop()
                frame[2] = None
            opts = options[idx]
            if opt >= len(opts):
                stack.pop()
                continue
            frame[1] = opt + 1
            choice = opts[opt]
            d, c1, c2 = choice
            if c2 in covered:
                continue
            covered.add(c1)
            covered.add(c2)
            placed.append(d)
            frame[2] = choice
            nxt = advance(idx + 1)
            if nxt == ncells:
                yield Tiling._trusted(n, frozenset(placed))
                continue  # same frame undoes and tries its other option
            stack.append([nxt, 0, None])

    return search()


def enumerate_pairs(n: int) -> dict[AsmMatrix, frozenset[AsmMatrix]]:
    """Group every order-n tiling by its larger ASM.

    The result maps each order-(n+1) ASM B to the set of order-n ASMs
    compatible with it; the set has exactly 2^k members where k is the
    number of -1 entries of B.  Materializes all 2^{n(n+1)/2} tilings, so
    n is capped at 5.
    """
    if not 1 <= n <= 5:
        raise ValueError("enumerate_pairs materializes all tilings; need 1 <= n <= 5")
    fibers: dict[AsmMatrix, set[AsmMatrix]] = defaultdict(set)
    for t in enumerate_tilings(n):
        smaller, larger = asm_pair_from_tiling(t)
        fibers[larger].add(smaller)
    return {larger: frozenset(group) for larger, group in fibers.items()}


# ---------------------------------------------------------------------------
# exact counting


@lru_cache(maxsize=None)
def _run_choices(length: int) -> tuple[int, ...]:
    """Push patterns for a free vertical run of `length` cells.

    A set bit marks a cell pushed into the next column by a horizontal
    domino; the remaining cells must pair up into vertical dominoes, which
    is possible exactly when every maximal unpushed stretch has even
    length (and then the pairing is forced).
    """
    if length == 0:
        return (0,)
    if length == 1:
        return (1,)
    pushed_first = tuple((m << 1) | 1 for m in _run_choices(length - 1))
    paired_first = tuple(m << 2 for m in _run_choices(length - 2))
    return pushed_first + paired_first


def count_tilings(n: int) -> int:
    """Exact number of tilings of the order-n diamond.

    Profile dynamic program over columns with a bitmask frontier: sweep the
    cell columns x = -n..-1, where the state is the set of cells of the
    next column already covered by horizontal dominoes reaching across.
    Filling one column factorizes over its maximal free runs, whose push
    patterns come from :func:`_run_choices`.

    The board is mirror-symmetric about the central cut (x -> -1-x), and
    reflecting a tiling of the right half gives a tiling of the left half
    with the same crossing set.  So the halves pair up by equal frontier
    masks and the total is the sum of the squared mask counts at the cut.
    No closed form is used anywhere.
    """
    if n < 1:
        raise ValueError("diamond order must be >= 1")
    state = {0: 1}
    for x in range(-n, 0):
        height = len(column_rows(n, x))
        new_state: dict[int, int] = {}
        for mask, count in state.items():
            runs = []
            i = 0
            while i < height:
                if mask >> i & 1:
                    i += 1
                    continue
                j = i
                while j < height and not (mask >> j & 1):
                    j += 1
                runs.append((i, j - i))
                i = j
            outs = [0]
            for start, length in runs:
                choices = _run_choices(length)
                outs = [out | (c << start) for out in outs for c in choices]
            for out in outs:
                new_state[out] = new_state.get(out, 0) + count
        if x < -1:
            # the next column is taller by one cell at each end; re-index
            state = {mask << 1: c for mask, c in new_state.items()}
        else:
            state = new_state
    return sum(c * c for c in state.values())


# ---------------------------------------------------------------------------
# text format


def format_tiling(t: Tiling) -> str:
    """Header ``toad <n>``, then one ``H x y`` / ``V x y`` line per domino,
    sorted by (y, x, orientation)."""
    lines = [f"toad {t.order}"]
    for d in sorted(t.dominoes, key=Domino.sort_key):
        lines.append(f"{d.orientation} {d.x} {d.y}")
    return "\n".join(lines)


def parse_tiling(text: str) -> Tiling:
    """Inverse of :func:`format_tiling`; rejects overlaps, gaps and
    out-of-diamond cells."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty tiling text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "toad":
        raise ValueError(f"bad tiling header {lines[0]!r}")
    try:
        n = int(header[1])
    except ValueError:
        raise ValueError(f"bad tiling header {lines[0]!r}") from None
    dominoes = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("H", "V"):
            raise ValueError(f"bad domino line {line!r}")
        try:
            dominoes.append(Domino(parts[0], int(parts[1]), int(parts[2])))
        except ValueError:
            raise ValueError(f"bad domino line {line!r}") from None
    if len(set(dominoes)) != len(dominoes):
        raise ValueError("duplicate domino line")
    return Tiling(n, frozenset(dominoes))
