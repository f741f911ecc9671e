"""
Nilradical, Semidirect Sums and Fingerprints
============================================

The nilradical of a solvable algebra is computed linearly: let A be the
associative algebra generated by the ad(e_i). Over C a solvable g acts
triangularly (Lie), so an element of A is nilpotent exactly when it lies in
the trace radical {a : tr(ab) = 0 for all b in A}. The x with ad(x) in that
radical are the ad-nilpotent elements, which for solvable g form the
nilradical.

A fingerprint collects real-isomorphism invariants. Different fingerprints
prove non-isomorphism; equal fingerprints prove nothing.
"""

import logging
from dataclasses import astuple, dataclass, fields
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from lierig.errors import NotSolvableError
from lierig.exact import RatMatrix, kernel_basis
from lierig.lie.cohomology import full_report
from lierig.lie.core import (
    StructureConstants,
    Subspace,
    induced_algebra,
    is_completely_solvable,
    is_solvable,
    killing_signature,
    center,
    derived_series_dims,
    lower_central_dims,
    require_lie,
)
from lierig.lie.derivations import derivation_space, make_torus, vec_to_matrix

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def associative_closure(g: StructureConstants) -> Subspace:
    """span of all products ad(e_i1) ... ad(e_im), m >= 1, in vec coordinates."""
    n = g.dim
    closure = Subspace.span(n * n, [a.vec() for a in g.ad_basis])
    frontier = [vec_to_matrix(v, n) for v in closure.basis]
    while frontier:
        fresh = []
        for word in frontier:
            for a in g.ad_basis:
                v = (a @ word).vec()
                if not closure.contains(v):
                    closure = closure + Subspace.span(n * n, [v])
                    fresh.append(vec_to_matrix(v, n))
        frontier = fresh
    logger.debug(f"associative closure of ad(g) has dimension {closure.dim}")
    return closure


@lru_cache(maxsize=128)
def nilradical(g: StructureConstants) -> Subspace:
    require_lie(g)
    if not is_solvable(g):
        raise NotSolvableError("nilradical is only computed for solvable algebras")
    n = g.dim
    if n == 0:
        return Subspace.zero(0)
    radical_rows = []
    for b in associative_closure(g).basis:
        bm = vec_to_matrix(b, n)
        radical_rows.append([(a @ bm).trace() for a in g.ad_basis])
    return Subspace.span(n, kernel_basis(RatMatrix(radical_rows, cols=n)))


def nilradical_algebra(g: StructureConstants) -> StructureConstants:
    return induced_algebra(g, nilradical(g))


def semidirect_sum(n: StructureConstants, torus_gens: Sequence[RatMatrix]) -> StructureConstants:
    """t + n with basis (T_1..T_k, then the basis of n) and [T_a, x] = D_a(x)."""
    make_torus(n, torus_gens)
    k = len(torus_gens)
    dim = k + n.dim
    brackets = {}
    for a, d in enumerate(torus_gens):
        for j in range(n.dim):
            col = d.column(j)
            if any(col):
                brackets[(a, k + j)] = {k + m: c for m, c in enumerate(col) if c}
    for (i, j), vec in n.entries:
        brackets[(k + i, k + j)] = {k + m: c for m, c in enumerate(vec) if c}
    return StructureConstants.from_brackets(dim, brackets)


def direct_sum(g: StructureConstants, h: StructureConstants) -> StructureConstants:
    shift = g.dim
    brackets = {key: dict(enumerate(vec)) for key, vec in g.entries}
    for (i, j), vec in h.entries:
        brackets[(shift + i, shift + j)] = {shift + m: c for m, c in enumerate(vec) if c}
    return StructureConstants.from_brackets(g.dim + h.dim, brackets)


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    derived_dims: Tuple[int, ...]
    lcs_dims: Tuple[int, ...]
    center_dim: int
    nilradical_dim: int
    nilradical_lcs_dims: Tuple[int, ...]
    der_dim: int
    h0: int
    h1: int
    h2: int
    killing_signature: Tuple[int, int, int]
    completely_solvable: bool

    def as_dict(self) -> dict:
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            out[f.name] = list(value) if isinstance(value, tuple) else value
        return out


@lru_cache(maxsize=128)
def fingerprint(g: StructureConstants) -> Fingerprint:
    require_lie(g)
    nil = nilradical(g)
    report = full_report(g)
    return Fingerprint(
        dim=g.dim,
        derived_dims=tuple(derived_series_dims(g)),
        lcs_dims=tuple(lower_central_dims(g)),
        center_dim=center(g).dim,
        nilradical_dim=nil.dim,
        nilradical_lcs_dims=tuple(lower_central_dims(induced_algebra(g, nil))),
        der_dim=derivation_space(g).dim,
        h0=report.h0,
        h1=report.h1,
        h2=report.h2,
        killing_signature=killing_signature(g),
        completely_solvable=is_completely_solvable(g),
    )


PROVABLY_NON_ISOMORPHIC = "ProvablyNonIsomorphic"
INDISTINGUISHABLE = "Indistinguishable"


@dataclass(frozen=True)
class Verdict:
    kind: str
    field: Optional[str] = None
    left: object = None
    right: object = None

    @property
    def non_isomorphic(self) -> bool:
        return self.kind == PROVABLY_NON_ISOMORPHIC

    def __str__(self):
        if self.field is None:
            return self.kind
        return f"{self.kind}: {self.field}"


def distinguish(g1: StructureConstants, g2: StructureConstants) -> Verdict:
    """First differing fingerprint field, in declaration order.

    Indistinguishable never means isomorphic.
    """
    f1, f2 = fingerprint(g1), fingerprint(g2)
    for f, a, b in zip(fields(Fingerprint), astuple(f1), astuple(f2)):
        if a != b:
            return Verdict(PROVABLY_NON_ISOMORPHIC, f.name, a, b)
    return Verdict(INDISTINGUISHABLE)
