"""Baxter permutations: two equivalent tests, witnesses, counting.

The pointwise test asks, for every adjacent pair of positions i, i+1, for
a pivot position k (k <= i allowed, k = i+1 not) whose value lies between
p(i) and p(i+1), such that every value from p(i)'s side of the pivot
(pivot included) occurs at a position <= i and every value strictly
between the pivot and p(i+1) occurs at a position > i+1.

The matrix test looks at the columns between the 1s of rows i and i+1 of
the permutation matrix and asks for a vertical line splitting them so
that every 1 on p(i+1)'s side sits in row i+1 or below and every 1 on
p(i)'s side sits in row i or above.  The two tests agree on every
permutation; the suite checks this exhaustively through size 7.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .core import Permutation, all_permutations


@dataclass(frozen=True)
class BaxterWitness:
    """Per i in 1..n-1 the smallest valid dividing column d_i (the line runs
    between columns d_i and d_i + 1), or None where no line exists."""

    dividers: tuple[int | None, ...]

    @property
    def ok(self) -> bool:
        return all(d is not None for d in self.dividers)

    @property
    def failed_at(self) -> int | None:
        for i, d in enumerate(self.dividers, start=1):
            if d is None:
                return i
        return None


def is_baxter_definition(p: Permutation) -> bool:
    """The pointwise pivot test, translated clause by clause."""
    n = p.size
    q = p.inverse()
    for i in range(1, n):
        a, b = p(i), p(i + 1)
        found = False
        for k in range(1, i + 1):
            v = p(k)
            if k != i and not (min(a, b) < v < max(a, b)):
                continue
            # values between p(i) and the pivot (pivot itself is position k <= i)
            lo, hi = sorted((a, v))
            if any(q(u) > i for u in range(lo + 1, hi)):
                continue
            # values strictly between the pivot and p(i+1)
            lo, hi = sorted((v, b))
            if any(q(u) <= i + 1 for u in range(lo + 1, hi) if u != v):
                continue
            found = True
            break
        if not found:
            return False
    return True


def _divider_ok(p: Permutation, q: Permutation, i: int, d: int) -> bool:
    """Does the line between columns d and d+1 segregate the 1s for rows
    i, i+1?"""
    a, b = p(i), p(i + 1)
    lo, hi = sorted((a, b))
    if a < b:
        left_rows_above = True  # p(i)'s side is the left one
    else:
        left_rows_above = False
    for c in range(lo, hi + 1):
        on_left = c <= d
        if on_left == left_rows_above:
            if q(c) > i:
                return False
        else:
            if q(c) < i + 1:
                return False
    return True


def is_baxter_matrix(p: Permutation) -> tuple[bool, BaxterWitness]:
    """The dividing-line test, with the smallest valid line per i."""
    n = p.size
    q = p.inverse()
    dividers: list[int | None] = []
    for i in range(1, n):
        lo, hi = sorted((p(i), p(i + 1)))
        found = None
        for d in range(lo, hi):
            if _divider_ok(p, q, i, d):
                found = d
                break
        dividers.append(found)
    witness = BaxterWitness(tuple(dividers))
    return witness.ok, witness


def baxter_number(n: int) -> int:
    """Number of Baxter permutations of size n, in exact integer arithmetic.

    Sum over r of C(n+1, r) C(n+1, r+1) C(n+1, r+2) / (C(n+1, 1) C(n+1, 2))
    for r = 0..n-1; every summand is itself an integer and the division is
    checked.  Classical displays of this sum use n+2 in every binomial;
    evaluated that way it counts the permutations of size n+1, so this
    evaluation runs one size lower to make baxter_number(n) match the
    brute-force count at size n.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    denom = comb(n + 1, 1) * comb(n + 1, 2)
    total = 0
    for r in range(n):
        numer = comb(n + 1, r) * comb(n + 1, r + 1) * comb(n + 1, r + 2)
        term, remainder = divmod(numer, denom)
        if remainder:
            raise ArithmeticError(f"summand r={r} not divisible for n={n}")
        total += term
    return total


def enumerate_baxter(n: int) -> Iterator[Permutation]:
    """Baxter permutations of size n in lexicographic order (n <= 8)."""
    if not 1 <= n <= 8:
        raise ValueError("enumeration sweeps all n! words; need 1 <= n <= 8")
    return (p for p in all_permutations(n) if is_baxter_definition(p))
