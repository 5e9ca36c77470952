"""Baxter permutations: two tests, dividing-line witnesses, exact counts.

A word is Baxter when every adjacent pair of rows of its matrix admits a
vertical line through the column window between their 1s that segregates
the other 1s: everything on one side sits above, everything on the other
side sits below.  The pointwise pivot test says the same thing without
matrices, and a closed-form sum of binomials counts the class exactly.
"""

from toadasm import (
    all_permutations,
    baxter_number,
    enumerate_baxter,
    format_permutation,
    is_baxter_definition,
    is_baxter_matrix,
    parse_permutation,
)

for word in ("45123", "3142", "2413", "321"):
    verdict, witness = is_baxter_matrix(parse_permutation(word))
    lines = ", ".join(
        f"i={i}:{'line ' + str(d) if d is not None else 'none'}"
        for i, d in enumerate(witness.dividers, start=1)
    )
    print(f"{word}: {'baxter' if verdict else 'not-baxter':>10}   [{lines}]")
print()

print("counts by size, formula vs brute force:")
for n in range(1, 8):
    brute = sum(1 for p in all_permutations(n) if is_baxter_definition(p))
    print(f"  size {n}: {baxter_number(n):>5} (formula)  {brute:>5} (brute force)")
print()

print("the 22 Baxter words of size 4 (2413 and 3142 are the two missing):")
words = [format_permutation(p) for p in enumerate_baxter(4)]
print("  " + " ".join(words))
