"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest verdicts.
"""

import time

import pytest

from toadasm import (
    AsmMatrix,
    all_permutations,
    asm_pair_from_tiling,
    baxter_number,
    count_tilings,
    enumerate_tilings,
    is_baxter_definition,
    is_baxter_matrix,
    parse_permutation,
    perm_to_matrix,
    smaller_asm,
    tiling_from_asm_pair,
    zero_mask,
)
from toadasm.cli import main

GOLDEN_SMALLER = AsmMatrix(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
GOLDEN_LARGER = AsmMatrix(((0, 1, 0, 0), (0, 0, 0, 1), (1, -1, 1, 0), (0, 1, 0, 0)))


def test_criterion_1_tiling_counts(capsys):
    start = time.monotonic()
    for n in range(1, 13):
        assert count_tilings(n) == 2 ** (n * (n + 1) // 2), f"DP wrong at n={n}"
    for n in range(1, 6):
        enumerated = sum(1 for _ in enumerate_tilings(n))
        assert enumerated == count_tilings(n), f"enumeration wrong at n={n}"
    assert main(["tilings", "count", "3"]) == 0
    assert capsys.readouterr().out == "64 64 OK\n"
    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"criterion 1 took {elapsed:.1f}s, budget 60s"
    print(f"PASS criterion 1: count_tilings == 2^(n(n+1)/2) for n=1..12, "
          f"enumeration matches for n=1..5 ({elapsed:.1f}s)")


def test_criterion_2_worked_example():
    p = parse_permutation("31425")
    assert smaller_asm(p).entries == (
        (0, 1, 0, 0),
        (1, -1, 1, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 1),
    )
    mask = zero_mask(perm_to_matrix(p))
    forced = {
        (i, j)
        for i, row in enumerate(mask, start=1)
        for j, f in enumerate(row, start=1)
        if f
    }
    assert forced == {
        (1, 1), (1, 3), (1, 4), (2, 4), (3, 1),
        (3, 3), (3, 4), (4, 1), (4, 2), (4, 3),
    }
    print("PASS criterion 2: smaller_asm(31425) and its forced-zero set are exact")


def test_criterion_3_theorem_exhaustive():
    start = time.monotonic()
    expected_counts = {2: 2, 3: 6, 4: 22, 5: 92, 6: 422, 7: 2074}
    for size in range(2, 8):
        baxter_count = 0
        for p in all_permutations(size):
            negative_free = smaller_asm(p).negative_count() == 0
            by_definition = is_baxter_definition(p)
            by_matrix, _ = is_baxter_matrix(p)
            assert negative_free == by_definition == by_matrix, f"counterexample {p}"
            baxter_count += by_definition
        assert baxter_count == expected_counts[size]
    elapsed = time.monotonic() - start
    assert elapsed < 120.0, f"criterion 3 took {elapsed:.1f}s, budget 120s"
    print(f"PASS criterion 3: -1-free smaller ASM <=> Baxter (both tests) for "
          f"sizes 2..7, counts 2,6,22,92,422,2074 ({elapsed:.1f}s)")


def test_criterion_4_fiber_law_and_oracle(fibers_by_order, fibers4):
    fibers = dict(fibers_by_order)
    fibers[4] = fibers4
    for n in (1, 2, 3, 4):
        for larger, fiber in fibers[n].items():
            assert len(fiber) == 2 ** larger.negative_count()
        for p in all_permutations(n + 1):
            assert fibers[n][perm_to_matrix(p)] == frozenset({smaller_asm(p)})
    print("PASS criterion 4: fiber sizes are 2^k and permutation-matrix fibers "
          "equal {smaller_asm} for n=1..4")


def test_criterion_5_uniqueness_round_trip():
    for n in (1, 2, 3, 4):
        for t in enumerate_tilings(n):
            # tiling_from_asm_pair searches to exhaustion, so completing
            # without AmbiguousPair certifies uniqueness
            assert tiling_from_asm_pair(*asm_pair_from_tiling(t)) == t
    print("PASS criterion 5: pair -> tiling -> pair is the identity and unique "
          "on all tilings of order <= 4")


def test_criterion_6_formula_consistency(capsys):
    for n in range(1, 8):
        brute = sum(1 for p in all_permutations(n) if is_baxter_definition(p))
        assert baxter_number(n) == brute
    with pytest.raises(SystemExit):
        main(["baxter", "count", "--help"])
    help_text = capsys.readouterr().out
    assert "N+2" in help_text and "size N+1" in help_text
    print("PASS criterion 6: baxter_number matches brute force for n=1..7 and "
          "the CLI help documents the index shift")


def test_criterion_7_golden_pair():
    t = tiling_from_asm_pair(GOLDEN_SMALLER, GOLDEN_LARGER)
    assert len(t.dominoes) == 12
    assert asm_pair_from_tiling(t) == (GOLDEN_SMALLER, GOLDEN_LARGER)
    print("PASS criterion 7: the example order-3/order-4 pair reconstructs to a "
          "12-domino tiling that extracts back to the pair")
