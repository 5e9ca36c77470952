"""From a tiling to its pair of alternating sign matrices and back.

Count the edges meeting each vertex of the two interleaved grids (the
four extreme corners carry an extra spur edge): 2, 3 or 4.  On the
smaller n x n grid the degrees 2/3/4 become +1/0/-1; on the larger
(n+1) x (n+1) grid the roles of +1 and -1 swap.  The resulting pair
determines the tiling uniquely.
"""

from toadasm import (
    RenderOptions,
    asm_pair_from_tiling,
    enumerate_pairs,
    enumerate_tilings,
    format_asm,
    render_tiling,
    tiling_from_asm_pair,
)

t = next(iter(enumerate_tilings(2)))
print("an order-2 tiling with the vertex values overlaid (+, 0, -):")
print(render_tiling(t, RenderOptions(show_vertices=True)))
print()

smaller, larger = asm_pair_from_tiling(t)
print(format_asm(smaller))
print(format_asm(larger))
print()

back = tiling_from_asm_pair(smaller, larger)
print(f"reconstruction returns the same tiling: {back == t}")
print()

# an order-(n+1) matrix with k entries equal to -1 is compatible with
# exactly 2^k order-n matrices
print("fibers at order 3 (larger matrix -> number of smaller partners):")
for larger, fiber in sorted(enumerate_pairs(2).items(), key=lambda kv: kv[0].entries):
    k = larger.negative_count()
    flat = " ".join(str(e) for row in larger.entries for e in row)
    print(f"  [{flat}]  k={k}  fiber size {len(fiber)} = 2^{k}")
