"""Build the smaller ASM partner of a permutation matrix directly.

A permutation matrix is compatible with exactly one smaller matrix (it
has no -1s, and the fiber law says 2^0 = 1 partners).  That partner can
be written down without ever touching a tiling: mask the entries forced
to zero by a clear ray of paired zero rows or columns, call the rest
boxes, and sign each box by whether its four nearest 1s wind around it.
"""

from toadasm import (
    box_grid,
    format_asm,
    parse_permutation,
    perm_to_matrix,
    render_interleaved,
    smaller_asm,
)

word = "31425"
p = parse_permutation(word)
b = perm_to_matrix(p)

print(f"permutation {word} as a matrix:")
print(format_asm(b))
print()

grid = box_grid(p)
print("box grid (. forced zero, N non-windmilled box, W windmilled box):")
for i in range(1, p.size):
    row = []
    for j in range(1, p.size):
        if not grid.is_box(i, j):
            row.append(".")
        elif (i, j) in grid.windmilled:
            row.append("W")
        else:
            row.append("N")
    print("  " + " ".join(row))
print()

a = smaller_asm(p)
print("the smaller partner (N -> +1, W -> -1):")
print(format_asm(a))
print()

print("both matrices interleaved on one lattice:")
print(render_interleaved(a, b))
print()

ident = parse_permutation("123456")
print("the identity word keeps one diagonal box per row:")
print(format_asm(smaller_asm(ident)))
