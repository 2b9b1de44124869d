"""Exact rational arithmetic: polynomials, matrices, resultants, invariant subspaces."""

from algentropy.exact_core.matrix import (
    RatMatrix,
    char_poly,
    companion_matrix,
    hyperkernel_basis,
    nullspace,
    quotient_matrix,
)
from algentropy.exact_core.polynomial import (
    ClearedPolynomial,
    IntPolynomial,
    RatPolynomial,
    clear_denominators,
    content_and_primitive,
    poly_gcd,
    powmod_monic,
    primitive_part,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

__all__ = [
    "ClearedPolynomial",
    "IntPolynomial",
    "RatMatrix",
    "RatPolynomial",
    "char_poly",
    "clear_denominators",
    "companion_matrix",
    "content_and_primitive",
    "hyperkernel_basis",
    "nullspace",
    "poly_gcd",
    "powmod_monic",
    "primitive_part",
    "quotient_matrix",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
]
