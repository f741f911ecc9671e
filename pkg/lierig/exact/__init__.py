"""Exact rational linear and polynomial algebra."""

from lierig.exact.matrix import (
    RatMatrix,
    Vector,
    as_vector,
    char_poly,
    echelon,
    evaluate_at_matrix,
    hstack,
    inverse,
    kernel_basis,
    min_poly,
    rank,
    row_space_basis,
    rref,
    signature,
    solve,
    unit_vector,
    vstack,
    zero_vector,
)
from lierig.exact.polynomial import (
    RatPolynomial,
    count_real_roots,
    has_only_real_roots,
    is_squarefree,
    poly_gcd,
    squarefree_part,
    sturm_sequence,
)

__all__ = [
    "RatMatrix",
    "RatPolynomial",
    "Vector",
    "as_vector",
    "char_poly",
    "count_real_roots",
    "echelon",
    "evaluate_at_matrix",
    "has_only_real_roots",
    "hstack",
    "inverse",
    "is_squarefree",
    "kernel_basis",
    "min_poly",
    "poly_gcd",
    "rank",
    "row_space_basis",
    "rref",
    "signature",
    "solve",
    "squarefree_part",
    "sturm_sequence",
    "unit_vector",
    "vstack",
    "zero_vector",
]
