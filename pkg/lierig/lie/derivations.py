"""
Derivations and Tori
====================

Derivations are solved as the kernel of the linear system
``D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j]`` in the n^2 matrix entries
(unknowns ordered as the column-stacked ``vec(D)``).

Semisimplicity is decided through the minimal polynomial only: squarefree
means diagonalizable over C, and a squarefree minimal polynomial whose roots
are all real means diagonalizable over R. Eigenvalues are never formed.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from lierig.errors import AlgebraMismatchError, DimensionMismatchError, NotATorusError
from lierig.exact import (
    RatMatrix,
    Vector,
    count_real_roots,
    is_squarefree,
    kernel_basis,
    min_poly,
    unit_vector,
)
from lierig.lie.core import StructureConstants, Subspace, bracket, center, require_lie

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def vec_to_matrix(v: Sequence, n: int) -> RatMatrix:
    """Inverse of ``RatMatrix.vec`` for an n x n matrix."""
    return RatMatrix.from_columns([v[b * n:(b + 1) * n] for b in range(n)], rows=n)


@dataclass(frozen=True)
class DerivationSpace:
    algebra: StructureConstants
    basis: Tuple[RatMatrix, ...]
    inner_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def span(self) -> Subspace:
        n = self.algebra.dim
        return Subspace.span(n * n, [d.vec() for d in self.basis])

    def contains(self, d: RatMatrix) -> bool:
        return self.span.contains(d.vec())


def _derivation_system(g: StructureConstants) -> RatMatrix:
    n = g.dim
    table = [[g.basis_bracket(i, j) for j in range(n)] for i in range(n)]

    def var(row, col):
        return col * n + row

    entries = {}
    eq = 0
    for i, j in combinations(range(n), 2):
        for k in range(n):
            coeffs = {}

            def add(index, value):
                s = coeffs.get(index, ZERO) + value
                if s:
                    coeffs[index] = s
                else:
                    coeffs.pop(index, None)

            for m, c in enumerate(table[i][j]):
                if c:
                    add(var(k, m), c)
            for m in range(n):
                c = table[m][j][k]
                if c:
                    add(var(m, i), -c)
                c = table[i][m][k]
                if c:
                    add(var(m, j), -c)
            if coeffs:
                for index, value in coeffs.items():
                    entries[(eq, index)] = value
                eq += 1
    return RatMatrix.from_sparse(eq, n * n, entries)


@lru_cache(maxsize=128)
def derivation_space(g: StructureConstants) -> DerivationSpace:
    """Der(g) as a basis of matrices (column j of D is D(e_j))."""
    require_lie(g)
    n = g.dim
    system = _derivation_system(g)
    basis = tuple(vec_to_matrix(v, n) for v in kernel_basis(system))
    logger.debug(f"Der: {system.rows} equations in {n * n} unknowns, dimension {len(basis)}")
    return DerivationSpace(g, basis, n - center(g).dim)


def is_derivation(g: StructureConstants, d: RatMatrix) -> bool:
    n = g.dim
    if d.shape != (n, n):
        raise DimensionMismatchError(f"map of shape {d.shape} on a dimension {n} algebra")
    for i, j in combinations(range(n), 2):
        lhs = d.apply(g.basis_bracket(i, j))
        ei, ej = unit_vector(n, i), unit_vector(n, j)
        rhs1 = bracket(g, d.column(i), ej)
        rhs2 = bracket(g, ei, d.column(j))
        if any(a != b + c for a, b, c in zip(lhs, rhs1, rhs2)):
            return False
    return True


def inner_derivations(g: StructureConstants) -> Subspace:
    """span{ad(e_i)} as a subspace of vec-coordinates in Q^(n*n)."""
    require_lie(g)
    n = g.dim
    return Subspace.span(n * n, [a.vec() for a in g.ad_basis])


def outer_derivations(g: StructureConstants) -> List[RatMatrix]:
    """Derivations completing ad(g) to a basis of Der(g); there are dim H^1 of them."""
    n = g.dim
    acc = inner_derivations(g)
    outer = []
    for d in derivation_space(g).basis:
        v = d.vec()
        if not acc.contains(v):
            outer.append(d)
            acc = acc + Subspace.span(n * n, [v])
    return outer


def is_semisimple(d: RatMatrix) -> bool:
    return is_squarefree(min_poly(d))


def is_real_diagonalizable(d: RatMatrix) -> bool:
    p = min_poly(d)
    return is_squarefree(p) and count_real_roots(p) == p.degree


@dataclass(frozen=True)
class Torus:
    algebra: StructureConstants
    generators: Tuple[RatMatrix, ...]
    name: Optional[str] = field(default=None, compare=False)

    @property
    def rank(self) -> int:
        return len(self.generators)


def torus_failure(g: StructureConstants, gens: Sequence[RatMatrix]):
    n = g.dim
    for idx, d in enumerate(gens):
        if d.shape != (n, n):
            raise DimensionMismatchError(
                f"torus generator {idx} has shape {d.shape}, algebra has dimension {n}"
            )
    for idx, d in enumerate(gens):
        if not is_derivation(g, d):
            return "derivation", idx, f"generator {idx} is not a derivation"
    for a, b in combinations(range(len(gens)), 2):
        if not gens[a].commutator(gens[b]).is_zero():
            return "commuting", (a, b), f"generators {a} and {b} do not commute"
    for idx, d in enumerate(gens):
        if not is_semisimple(d):
            return "semisimple", idx, f"generator {idx} is not semisimple"
    return None


def is_torus(g: StructureConstants, gens: Sequence[RatMatrix]) -> bool:
    """Derivations, pairwise commuting, each semisimple.

    Commuting semisimple maps are simultaneously diagonalizable over C, so
    every element of the span is semisimple as well.
    """
    require_lie(g)
    return torus_failure(g, gens) is None


def make_torus(g: StructureConstants, gens: Sequence[RatMatrix], name: Optional[str] = None) -> Torus:
    require_lie(g)
    failure = torus_failure(g, gens)
    if failure is not None:
        check, index, message = failure
        raise NotATorusError(message, check=check, index=index)
    return Torus(g, tuple(gens), name)


def is_split_torus(t: Torus) -> bool:
    """Every generator diagonalizable over R; then the whole span is."""
    failure = torus_failure(t.algebra, t.generators)
    if failure is not None:
        check, index, message = failure
        raise NotATorusError(message, check=check, index=index)
    return all(is_real_diagonalizable(d) for d in t.generators)


@dataclass(frozen=True)
class NonConjugacyCertificate:
    """The torus numbered ``witness_index`` (1 or 2) holds ``witness_element``
    whose minimal polynomial has fewer real roots than its degree, while the
    other torus is split. Real conjugation preserves spectra."""

    witness_index: int
    witness_element: Vector
    witness_matrix: RatMatrix
    real_roots: int
    degree: int

    @property
    def reason(self) -> str:
        return (
            f"squarefree minimal polynomial of degree {self.degree} "
            f"with {self.real_roots} real roots against a split torus"
        )


def nonconjugacy_certificate(t1: Torus, t2: Torus) -> Optional[NonConjugacyCertificate]:
    """One-sided certificate; None means inconclusive, not conjugate."""
    if t1.algebra != t2.algebra:
        raise AlgebraMismatchError("tori live on different algebras")
    split1, split2 = is_split_torus(t1), is_split_torus(t2)
    if split1 == split2:
        return None
    index, torus = (2, t2) if split1 else (1, t1)
    for g_idx, d in enumerate(torus.generators):
        p = min_poly(d)
        roots = count_real_roots(p)
        if roots < p.degree:
            element = unit_vector(len(torus.generators), g_idx)
            return NonConjugacyCertificate(index, element, d, roots, p.degree)
    return None


def diagonal_derivations(g: StructureConstants) -> Subspace:
    """Diagonal derivations as their diagonals (lambda_0, ..., lambda_{n-1}) in Q^n.

    Each nonzero constant C_ij^k imposes lambda_i + lambda_j = lambda_k.
    """
    require_lie(g)
    n = g.dim
    rows = []
    for i, j, k, _ in g.nonzero_constants():
        row = [ZERO] * n
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        rows.append(row)
    if not rows:
        return Subspace.whole(n)
    return Subspace.span(n, kernel_basis(RatMatrix(rows, cols=n)))
