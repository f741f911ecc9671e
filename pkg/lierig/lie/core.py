"""
Structure Constants and Basic Invariants
========================================

A Lie algebra is stored as its dimension plus the nonzero brackets
``[e_i, e_j]`` for ``i < j``; antisymmetry is never stored. Validation
(Jacobi) is explicit: constructing a ``StructureConstants`` never checks it.

Matrix convention used everywhere: column ``j`` of ``ad(x)`` is ``[x, e_j]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from lierig.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    NotALieAlgebraError,
)
from lierig.exact import (
    RatMatrix,
    Vector,
    as_vector,
    char_poly,
    has_only_real_roots,
    inverse,
    kernel_basis,
    row_space_basis,
    signature,
    unit_vector,
    vstack,
    zero_vector,
)

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

BracketValue = Union[Sequence, Mapping[int, object]]


def _dense(value: BracketValue, dim: int) -> Vector:
    if isinstance(value, Mapping):
        out = [ZERO] * dim
        for k, c in value.items():
            if not 0 <= k < dim:
                raise DimensionMismatchError(f"bracket target index {k} outside 0..{dim - 1}")
            out[k] += Fraction(c)
        return tuple(out)
    if len(value) != dim:
        raise DimensionMismatchError(f"bracket vector of length {len(value)} in dimension {dim}")
    return as_vector(value)


@dataclass(frozen=True)
class StructureConstants:
    """``entries`` holds ``((i, j), vector)`` with ``i < j`` and nonzero vectors, sorted."""

    dim: int
    entries: Tuple[Tuple[Tuple[int, int], Vector], ...] = ()

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[Tuple[int, int], BracketValue]) -> StructureConstants:
        """Build from 0-based pairs; ``(j, i)`` keys are folded in with a sign.

        Values are coefficient vectors of length ``dim`` or sparse ``{k: c}`` maps.
        """
        acc: Dict[Tuple[int, int], List[Fraction]] = {}
        for (i, j), value in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError(f"bracket ({i}, {j}) outside dimension {dim}")
            vec = _dense(value, dim)
            if i == j:
                if any(vec):
                    raise NotALieAlgebraError(f"self-bracket [e{i}, e{i}] must vanish")
                continue
            sign = 1 if i < j else -1
            key = (min(i, j), max(i, j))
            slot = acc.setdefault(key, [ZERO] * dim)
            for k, c in enumerate(vec):
                slot[k] += sign * c
        entries = tuple(
            (key, tuple(vec)) for key, vec in sorted(acc.items()) if any(vec)
        )
        return cls(dim, entries)

    @classmethod
    def abelian(cls, dim: int) -> StructureConstants:
        return cls(dim, ())

    @cached_property
    def brackets(self) -> Dict[Tuple[int, int], Vector]:
        return dict(self.entries)

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[e_i, e_j] for any ordered pair."""
        if i == j:
            return zero_vector(self.dim)
        if i < j:
            return self.brackets.get((i, j), zero_vector(self.dim))
        return tuple(-c for c in self.brackets.get((j, i), zero_vector(self.dim)))

    @cached_property
    def ad_basis(self) -> Tuple[RatMatrix, ...]:
        """ad(e_i) for every basis index."""
        n = self.dim
        return tuple(
            RatMatrix.from_columns([self.basis_bracket(i, j) for j in range(n)], rows=n)
            for i in range(n)
        )

    def scaled(self, factor) -> StructureConstants:
        """Every structure constant multiplied by ``factor`` (isomorphic when nonzero)."""
        f = Fraction(factor)
        return StructureConstants.from_brackets(
            self.dim, {key: tuple(f * c for c in vec) for key, vec in self.entries}
        )

    def nonzero_constants(self) -> Iterable[Tuple[int, int, int, Fraction]]:
        for (i, j), vec in self.entries:
            for k, c in enumerate(vec):
                if c:
                    yield i, j, k, c


def _check_vector(g: StructureConstants, x: Sequence, name: str = "vector"):
    if len(x) != g.dim:
        raise DimensionMismatchError(f"{name} of length {len(x)} in a dimension {g.dim} algebra")


def bracket(g: StructureConstants, x: Sequence, y: Sequence) -> Vector:
    _check_vector(g, x)
    _check_vector(g, y)
    out = [ZERO] * g.dim
    for (i, j), vec in g.entries:
        w = Fraction(x[i]) * y[j] - Fraction(x[j]) * y[i]
        if w:
            for k, c in enumerate(vec):
                if c:
                    out[k] += w * c
    return tuple(out)


def ad(g: StructureConstants, x: Sequence) -> RatMatrix:
    _check_vector(g, x)
    n = g.dim
    out = RatMatrix.zeros(n, n)
    for i, xi in enumerate(x):
        if xi:
            out = out + g.ad_basis[i] * xi
    return out


@lru_cache(maxsize=256)
def _violations(g: StructureConstants) -> Tuple[Tuple[int, int, int, Vector], ...]:
    n = g.dim
    found = []
    for i, j, k in combinations(range(n), 3):
        ei, ej, ek = (unit_vector(n, t) for t in (i, j, k))
        terms = (
            bracket(g, g.basis_bracket(i, j), ek),
            bracket(g, g.basis_bracket(j, k), ei),
            bracket(g, g.basis_bracket(k, i), ej),
        )
        total = tuple(sum(parts, ZERO) for parts in zip(*terms))
        if any(total):
            found.append((i, j, k, total))
    return tuple(found)


def jacobi_violations(g: StructureConstants) -> List[Tuple[int, int, int, Vector]]:
    """Basis triples i < j < k with nonzero Jacobiator, and the Jacobiator."""
    return list(_violations(g))


def is_lie_algebra(g: StructureConstants) -> bool:
    return not _violations(g)


def require_lie(g: StructureConstants):
    violations = _violations(g)
    if violations:
        i, j, k, _ = violations[0]
        raise NotALieAlgebraError(
            f"Jacobi identity fails on basis triple ({i}, {j}, {k})", triple=(i, j, k)
        )


# -- subspaces ----------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n kept in reduced echelon form, so equal subspaces compare equal."""

    ambient_dim: int
    basis: Tuple[Vector, ...] = field(default=())

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        vectors = list(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in Q^{ambient_dim}")
        return cls(ambient_dim, tuple(row_space_basis(vectors, ambient_dim)))

    @classmethod
    def whole(cls, n: int) -> Subspace:
        return cls.span(n, [unit_vector(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(k for k, c in enumerate(v) if c) for v in self.basis)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coordinates of ``v`` in the echelon basis, or None if ``v`` is outside."""
        coords = tuple(Fraction(v[p]) for p in self.pivots)
        rebuilt = [ZERO] * self.ambient_dim
        for c, b in zip(coords, self.basis):
            if c:
                for k, x in enumerate(b):
                    rebuilt[k] += c * x
        return coords if tuple(rebuilt) == tuple(Fraction(x) for x in v) else None

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def __add__(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError("subspaces of different ambient spaces")
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def __contains__(self, v) -> bool:
        return self.contains(v)


def bracket_span(g: StructureConstants, a: Subspace, b: Subspace) -> Subspace:
    """span{[x, y] : x in a, y in b}."""
    return Subspace.span(g.dim, [bracket(g, x, y) for x in a.basis for y in b.basis])


def is_subalgebra(g: StructureConstants, s: Subspace) -> bool:
    return bracket_span(g, s, s).is_subspace_of(s)


def is_ideal(g: StructureConstants, s: Subspace) -> bool:
    return bracket_span(g, Subspace.whole(g.dim), s).is_subspace_of(s)


def induced_algebra(g: StructureConstants, s: Subspace) -> StructureConstants:
    """Structure constants of the subalgebra ``s`` in its echelon basis."""
    brackets = {}
    for a, b in combinations(range(s.dim), 2):
        coords = s.coordinates(bracket(g, s.basis[a], s.basis[b]))
        if coords is None:
            raise AlgebraMismatchError("subspace is not closed under the bracket")
        brackets[(a, b)] = coords
    return StructureConstants.from_brackets(s.dim, brackets)


def change_basis(g: StructureConstants, p: RatMatrix) -> StructureConstants:
    """Structure constants in the basis formed by the columns of ``p``."""
    if p.shape != (g.dim, g.dim):
        raise DimensionMismatchError(f"basis change of shape {p.shape} for dimension {g.dim}")
    p_inv = inverse(p)
    cols = [p.column(j) for j in range(g.dim)]
    brackets = {
        (a, b): p_inv.apply(bracket(g, cols[a], cols[b]))
        for a, b in combinations(range(g.dim), 2)
    }
    return StructureConstants.from_brackets(g.dim, brackets)


# -- series -------------------------------------------------------------------


def _series_dims(g: StructureConstants, step) -> List[int]:
    require_lie(g)
    current = Subspace.whole(g.dim)
    dims = [current.dim]
    while current.dim:
        nxt = step(current)
        if nxt.dim == current.dim:
            break
        dims.append(nxt.dim)
        current = nxt
    return dims


def derived_series_dims(g: StructureConstants) -> List[int]:
    """dim g^(k), stopping once the series stabilizes (the repeated term is dropped)."""
    return _series_dims(g, lambda s: bracket_span(g, s, s))


def lower_central_dims(g: StructureConstants) -> List[int]:
    whole = Subspace.whole(g.dim)
    return _series_dims(g, lambda s: bracket_span(g, whole, s))


def derived_algebra(g: StructureConstants) -> Subspace:
    whole = Subspace.whole(g.dim)
    return bracket_span(g, whole, whole)


def is_solvable(g: StructureConstants) -> bool:
    return derived_series_dims(g)[-1] == 0


def is_nilpotent(g: StructureConstants) -> bool:
    return lower_central_dims(g)[-1] == 0


def center(g: StructureConstants) -> Subspace:
    require_lie(g)
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    # [x, e_j] = -ad(e_j) x, so x is central iff every ad(e_j) kills it
    stacked = vstack(list(g.ad_basis))
    return Subspace.span(n, kernel_basis(stacked))


def killing_form(g: StructureConstants) -> RatMatrix:
    require_lie(g)
    n = g.dim
    ads = g.ad_basis
    entries = {}
    for i in range(n):
        for j in range(i, n):
            v = (ads[i] @ ads[j]).trace()
            if v:
                entries[(i, j)] = entries[(j, i)] = v
    return RatMatrix.from_sparse(n, n, entries)


def killing_signature(g: StructureConstants) -> Tuple[int, int, int]:
    return signature(killing_form(g))


# -- complete solvability -----------------------------------------------------

COMPLETELY_SOLVABLE = "completely_solvable"
NOT_SOLVABLE = "not_solvable"
NON_REAL_SPECTRUM = "non_real_spectrum"


@dataclass(frozen=True)
class SolvabilityVerdict:
    completely_solvable: bool
    reason: str
    index: Optional[int] = None

    def __bool__(self):
        return self.completely_solvable


def complete_solvability(g: StructureConstants) -> SolvabilityVerdict:
    """Completely solvable iff solvable and every ad(e_j) has only real eigenvalues.

    For solvable g the eigenvalues of ad(x) are weights (linear functionals)
    evaluated at x, so real weights on a basis make them real everywhere.
    """
    if not is_solvable(g):
        return SolvabilityVerdict(False, NOT_SOLVABLE)
    for j, a in enumerate(g.ad_basis):
        if not has_only_real_roots(char_poly(a)):
            logger.debug(f"ad(e{j}) has non-real spectrum")
            return SolvabilityVerdict(False, NON_REAL_SPECTRUM, j)
    return SolvabilityVerdict(True, COMPLETELY_SOLVABLE)


def is_completely_solvable(g: StructureConstants) -> bool:
    return complete_solvability(g).completely_solvable
