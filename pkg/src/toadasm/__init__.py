"""Domino tilings of Aztec diamonds, ASM pairs, and Baxter permutations.

Every tiling of the order-n diamond determines a compatible pair of
alternating sign matrices of orders n and n+1, and the pair determines the
tiling back.  The larger matrix of a pair is a permutation matrix with a
-1-free partner exactly when its permutation is Baxter; this package holds
the constructions, predicates, counters and exhaustive checks around that
correspondence.
"""

from .baxter import (
    BaxterWitness,
    baxter_number,
    enumerate_baxter,
    is_baxter_definition,
    is_baxter_matrix,
)
from .core import (
    AsmMatrix,
    Cell,
    GridKind,
    NotPermutationMatrix,
    Permutation,
    VertexId,
    all_permutations,
    corner_points,
    diamond_cells,
    format_asm,
    format_permutation,
    in_diamond,
    matrix_to_perm,
    parse_asm,
    parse_permutation,
    perm_to_matrix,
    validate_asm,
)
from .render import OrderMismatch, RenderOptions, render_interleaved, render_tiling
from .smalleralg import (
    BoxClass,
    BoxGrid,
    NotABox,
    box_grid,
    box_positions_closed_form,
    classify_box,
    smaller_asm,
    zero_mask,
)
from .tiling import (
    AmbiguousPair,
    CompatiblePair,
    Domino,
    IncompatiblePair,
    InvalidVertex,
    Tiling,
    asm_pair_from_tiling,
    count_tilings,
    enumerate_pairs,
    enumerate_tilings,
    format_tiling,
    is_compatible,
    parse_tiling,
    tiling_from_asm_pair,
    vertex_degree,
)

__all__ = [
    "AmbiguousPair",
    "AsmMatrix",
    "BaxterWitness",
    "BoxClass",
    "BoxGrid",
    "Cell",
    "CompatiblePair",
    "Domino",
    "GridKind",
    "IncompatiblePair",
    "InvalidVertex",
    "NotABox",
    "NotPermutationMatrix",
    "OrderMismatch",
    "Permutation",
    "RenderOptions",
    "Tiling",
    "VertexId",
    "all_permutations",
    "asm_pair_from_tiling",
    "baxter_number",
    "box_grid",
    "box_positions_closed_form",
    "classify_box",
    "corner_points",
    "count_tilings",
    "diamond_cells",
    "enumerate_baxter",
    "enumerate_pairs",
    "enumerate_tilings",
    "format_asm",
    "format_permutation",
    "format_tiling",
    "in_diamond",
    "is_baxter_definition",
    "is_baxter_matrix",
    "is_compatible",
    "matrix_to_perm",
    "parse_asm",
    "parse_permutation",
    "parse_tiling",
    "perm_to_matrix",
    "render_interleaved",
    "render_tiling",
    "smaller_asm",
    "tiling_from_asm_pair",
    "validate_asm",
    "vertex_degree",
    "zero_mask",
]

__version__ = "0.1.0"
