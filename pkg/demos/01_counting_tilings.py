"""Count and enumerate domino tilings of small diamond boards.

The order-n board has 2n(n+1) cells and exactly 2^(n(n+1)/2) tilings.
The counter never touches that closed form: it sweeps cell columns with a
bitmask frontier and meets itself in the middle, so comparing the two is
a real check.
"""

from toadasm import RenderOptions, count_tilings, enumerate_tilings, render_tiling

print("exact counts vs the closed form")
for n in range(1, 9):
    dp = count_tilings(n)
    closed = 2 ** (n * (n + 1) // 2)
    print(f"  order {n}: {dp:>12}  {'ok' if dp == closed else 'MISMATCH'}")

print()
print("the two order-1 tilings:")
for t in enumerate_tilings(1):
    print(render_tiling(t))
    print()

print("one order-3 tiling, dominoes as <> and ^v bricks:")
first = next(iter(enumerate_tilings(3)))
print(render_tiling(first))

print()
print("the same tiling as SVG (first 3 lines):")
svg = render_tiling(first, RenderOptions(format="svg"))
print("\n".join(svg.splitlines()[:3]))
