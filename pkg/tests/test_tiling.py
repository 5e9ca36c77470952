from collections import Counter

import pytest

from toadasm import (
    AsmMatrix,
    CompatiblePair,
    Domino,
    GridKind,
    IncompatiblePair,
    InvalidVertex,
    Tiling,
    VertexId,
    asm_pair_from_tiling,
    count_tilings,
    enumerate_tilings,
    format_tiling,
    is_compatible,
    parse_tiling,
    tiling_from_asm_pair,
    vertex_degree,
)

HORIZONTAL_1 = Tiling(1, frozenset({Domino("H", -1, 0), Domino("H", -1, -1)}))
VERTICAL_1 = Tiling(1, frozenset({Domino("V", -1, -1), Domino("V", 0, -1)}))

GOLDEN_SMALLER = AsmMatrix(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
GOLDEN_LARGER = AsmMatrix(((0, 1, 0, 0), (0, 0, 0, 1), (1, -1, 1, 0), (0, 1, 0, 0)))


def test_tiling_validation():
    with pytest.raises(ValueError, match="covered twice"):
        Tiling(1, frozenset({Domino("H", -1, 0), Domino("V", -1, -1), Domino("V", 0, -1)}))
    with pytest.raises(ValueError, match="not covered"):
        Tiling(1, frozenset({Domino("H", -1, 0)}))
    with pytest.raises(ValueError, match="outside"):
        Tiling(1, frozenset({Domino("H", 0, 0), Domino("H", -1, -1)}))
    with pytest.raises(ValueError):
        Domino("X", 0, 0)


def test_vertex_degree_hand_cases():
    # horizontal order-1 tiling: top corner keeps its two boundary edges and
    # the spur, the interior edge vanishes inside the top domino
    top = VertexId(GridKind.LARGER, 1, 1)
    assert top.lattice_point(1) == (0, 1)
    assert vertex_degree(HORIZONTAL_1, top) == 3
    center = VertexId(GridKind.SMALLER, 0, 0)
    assert vertex_degree(HORIZONTAL_1, center) == 2
    assert vertex_degree(VERTICAL_1, center) == 2
    with pytest.raises(InvalidVertex):
        vertex_degree(HORIZONTAL_1, VertexId(GridKind.LARGER, 2, 0))
    with pytest.raises(InvalidVertex):
        vertex_degree(HORIZONTAL_1, VertexId(GridKind.SMALLER, 1, 0))


def test_order1_pair_extraction():
    assert asm_pair_from_tiling(HORIZONTAL_1) == (
        AsmMatrix(((1,),)),
        AsmMatrix(((0, 1), (1, 0))),
    )
    assert asm_pair_from_tiling(VERTICAL_1) == (
        AsmMatrix(((1,),)),
        AsmMatrix(((1, 0), (0, 1))),
    )


def test_order1_pair_reconstruction():
    assert tiling_from_asm_pair(AsmMatrix(((1,),)), AsmMatrix(((0, 1), (1, 0)))) == HORIZONTAL_1
    assert tiling_from_asm_pair(AsmMatrix(((1,),)), AsmMatrix(((1, 0), (0, 1)))) == VERTICAL_1


def test_golden_pair_reconstructs_and_round_trips():
    t = tiling_from_asm_pair(GOLDEN_SMALLER, GOLDEN_LARGER)
    assert len(t.dominoes) == 12
    assert asm_pair_from_tiling(t) == (GOLDEN_SMALLER, GOLDEN_LARGER)
    assert is_compatible(GOLDEN_SMALLER, GOLDEN_LARGER)


def test_reconstruction_rejects_mismatched_orders():
    with pytest.raises(ValueError, match="consecutive"):
        tiling_from_asm_pair(GOLDEN_SMALLER, GOLDEN_SMALLER)
    with pytest.raises(ValueError, match="consecutive"):
        is_compatible(GOLDEN_LARGER, GOLDEN_SMALLER)


def test_compatibility_matches_fibers_exhaustively(fibers_by_order):
    """Cross every order-2 ASM with every order-3 ASM: compatibility must
    agree with fiber membership, and exactly count_tilings(2) pairs match."""
    order2 = sorted(fibers_by_order[1].keys(), key=lambda m: m.entries)
    order3 = sorted(fibers_by_order[2].keys(), key=lambda m: m.entries)
    assert len(order2) == 2 and len(order3) == 7
    compatible = 0
    incompatible_seen = False
    for a in order2:
        for b in order3:
            expected = a in fibers_by_order[2][b]
            assert is_compatible(a, b) == expected
            if expected:
                compatible += 1
            else:
                incompatible_seen = True
                with pytest.raises(IncompatiblePair):
                    tiling_from_asm_pair(a, b)
    assert compatible == count_tilings(2) == 8
    assert incompatible_seen


def test_enumerate_tilings_counts_and_determinism():
    assert sum(1 for _ in enumerate_tilings(1)) == 2
    assert sum(1 for _ in enumerate_tilings(2)) == 8
    first = list(enumerate_tilings(3))
    second = list(enumerate_tilings(3))
    assert first == second
    assert len(first) == 64
    assert len(set(first)) == 64


def test_enumerate_tilings_partitions_by_prefix():
    full = Counter(enumerate_tilings(3))
    # the scan starts at cell (-1, -3); its two placements split the stream
    merged = Counter()
    for seed in (Domino("H", -1, -3), Domino("V", -1, -3)):
        merged.update(enumerate_tilings(3, containing=(seed,)))
    assert merged == full
    with pytest.raises(ValueError):
        next(enumerate_tilings(2, containing=(Domino("H", 5, 5),)))


def test_count_tilings_against_closed_form():
    for n in range(1, 9):
        assert count_tilings(n) == 2 ** (n * (n + 1) // 2)


def test_count_tilings_n10_frozen():
    # 2^55, evaluated independently of the DP
    assert count_tilings(10) == 36028797018963968


def test_enumeration_agrees_with_count():
    for n in range(1, 5):
        assert sum(1 for _ in enumerate_tilings(n)) == count_tilings(n)


def test_enumeration_agrees_with_count_order_6():
    # the heavyweight in this suite: streams all 2^21 tilings (~30s)
    assert sum(1 for _ in enumerate_tilings(6)) == count_tilings(6) == 2**21


def test_enumerated_tilings_revalidate():
    """Enumeration skips the cover check internally, so re-run it."""
    for n in (1, 2, 3):
        for t in enumerate_tilings(n):
            assert Tiling(t.order, t.dominoes) == t


def test_vertex_degrees_stay_in_range():
    for t in enumerate_tilings(2):
        for grid, span in ((GridKind.LARGER, 3), (GridKind.SMALLER, 2)):
            for a in range(span):
                for b in range(span):
                    assert vertex_degree(t, VertexId(grid, a, b)) in (2, 3, 4)


def test_order_guards():
    with pytest.raises(ValueError):
        count_tilings(0)
    with pytest.raises(ValueError):
        next(enumerate_tilings(0))
    from toadasm import diamond_cells, enumerate_pairs

    with pytest.raises(ValueError):
        diamond_cells(0)
    with pytest.raises(ValueError):
        enumerate_pairs(6)


def test_extracted_pairs_are_valid_asms():
    for n in (1, 2, 3):
        for t in enumerate_tilings(n):
            smaller, larger = asm_pair_from_tiling(t)
            assert smaller.order == n and larger.order == n + 1


def test_fiber_structure(fibers_by_order):
    ones = fibers_by_order[1]
    assert set(ones) == {AsmMatrix(((0, 1), (1, 0))), AsmMatrix(((1, 0), (0, 1)))}
    assert all(fiber == frozenset({AsmMatrix(((1,),))}) for fiber in ones.values())

    twos = fibers_by_order[2]
    assert len(twos) == 7
    assert sum(len(f) for f in twos.values()) == 8
    perm_keys = [b for b in twos if b.is_permutation_matrix]
    assert len(perm_keys) == 6
    assert all(len(twos[b]) == 1 for b in perm_keys)
    (negative_key,) = [b for b in twos if b.negative_count() == 1]
    assert len(twos[negative_key]) == 2

    threes = fibers_by_order[3]
    assert len(threes) == 42
    assert len(threes[GOLDEN_LARGER]) == 2  # one -1, so a fiber of 2^1
    for b, fiber in threes.items():
        assert len(fiber) == 2 ** b.negative_count()


def test_round_trip_identity_small_orders():
    for n in (1, 2, 3):
        for t in enumerate_tilings(n):
            assert tiling_from_asm_pair(*asm_pair_from_tiling(t)) == t


def test_compatible_pair_bundle():
    t = tiling_from_asm_pair(GOLDEN_SMALLER, GOLDEN_LARGER)
    pair = CompatiblePair.from_tiling(t)
    assert (pair.smaller, pair.larger) == (GOLDEN_SMALLER, GOLDEN_LARGER)
    assert CompatiblePair.from_matrices(GOLDEN_SMALLER, GOLDEN_LARGER).witness == t
    with pytest.raises(ValueError):
        CompatiblePair(GOLDEN_SMALLER, GOLDEN_LARGER, HORIZONTAL_1)


def test_tiling_text_format_round_trip():
    text = format_tiling(HORIZONTAL_1)
    assert text == "toad 1\nH -1 -1\nH -1 0"
    assert parse_tiling(text) == HORIZONTAL_1
    for t in list(enumerate_tilings(3))[:8]:
        assert parse_tiling(format_tiling(t)) == t


def test_tiling_text_format_rejects_malformed():
    for bad in (
        "",
        "nope 1\nH -1 -1\nH -1 0",
        "toad x\nH -1 -1",
        "toad 1\nD -1 -1\nH -1 0",
        "toad 1\nH -1 -1\nH -1 q",
        "toad 1\nH -1 -1",          # gap
        "toad 1\nH -1 -1\nH -1 -1\nH -1 0",  # duplicate line
        "toad 1\nH -1 -1\nV -1 -1\nV 0 -1",  # overlap
        "toad 1\nH -1 -1\nH 0 0",   # out of diamond
    ):
        with pytest.raises(ValueError):
            parse_tiling(bad)
