"""
Chevalley-Eilenberg Cohomology with Adjoint Coefficients
========================================================

Cochains C^k = Hom(L^k g, g) for k = 0..3. A basis cochain is a pair
(k-subset S, target t): it sends e_S to e_t and vanishes on the other
subsets. Flat index = colex position of S * n + t, so the target varies
fastest.

Differential (one formula for every degree):

    (d phi)(x_0..x_k) = sum_i (-1)^i [x_i, phi(.. x_i omitted ..)]
                      + sum_{i<j} (-1)^(i+j) phi([x_i, x_j], .. x_i, x_j omitted ..)

which gives d0 x (y) = [y, x] and
d1 f (x, y) = [x, f(y)] - [y, f(x)] - f([x, y]).

Ranks are computed over Q; they equal the ranks over R and C, so these
dimensions hold for the real and complex algebra alike.
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Tuple

from lierig.errors import CochainDegreeError
from lierig.exact import RatMatrix, rank
from lierig.lie.core import StructureConstants, require_lie

logger = logging.getLogger(__name__)

ZERO = Fraction(0)

Subset = Tuple[int, ...]


def colex_position(subset: Subset) -> int:
    return sum(comb(s, t + 1) for t, s in enumerate(subset))


def colex_subsets(n: int, k: int) -> Tuple[Subset, ...]:
    return tuple(sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s))))


@dataclass(frozen=True)
class CochainSpace:
    algebra: StructureConstants
    degree: int

    @property
    def subsets(self) -> Tuple[Subset, ...]:
        return colex_subsets(self.algebra.dim, self.degree)

    @property
    def dim(self) -> int:
        n = self.algebra.dim
        return n * comb(n, self.degree)

    def index(self, target: int, subset: Subset) -> int:
        return colex_position(tuple(sorted(subset))) * self.algebra.dim + target

    def entry(self, flat: int) -> Tuple[int, Subset]:
        """(target, subset) for a flat index."""
        n = self.algebra.dim
        position, target = divmod(flat, n)
        return target, self.subsets[position]


def cochain_space(g: StructureConstants, k: int) -> CochainSpace:
    if not 0 <= k <= 3:
        raise CochainDegreeError(f"cochain degree {k} outside 0..3")
    return CochainSpace(g, k)


def _sorted_sign(m: int, rest: Subset) -> int:
    """Sign of sorting (m, *rest) when ``rest`` is sorted and m is not in it."""
    return -1 if sum(1 for r in rest if r < m) % 2 else 1


@lru_cache(maxsize=64)
def differential_matrix(g: StructureConstants, k: int) -> RatMatrix:
    """Matrix of d^k: C^k -> C^(k+1) in the flat index scheme."""
    if not 0 <= k <= 2:
        raise CochainDegreeError(f"differential degree {k} outside 0..2")
    require_lie(g)
    n = g.dim
    source, target_space = CochainSpace(g, k), CochainSpace(g, k + 1)
    entries: Dict[Tuple[int, int], Fraction] = {}

    def add(row, col, value):
        entries[(row, col)] = entries.get((row, col), ZERO) + value

    for out in target_space.subsets:
        for i, x_i in enumerate(out):
            s = out[:i] + out[i + 1:]
            sign = -1 if i % 2 else 1
            for t in range(n):
                # [x_i, e_t]
                for comp, c in enumerate(g.basis_bracket(x_i, t)):
                    if c:
                        add(target_space.index(comp, out), source.index(t, s), sign * c)
        for i, j in combinations(range(len(out)), 2):
            x_i, x_j = out[i], out[j]
            rest = tuple(x for p, x in enumerate(out) if p not in (i, j))
            sign = -1 if (i + j) % 2 else 1
            for m, c in enumerate(g.basis_bracket(x_i, x_j)):
                if not c or m in rest:
                    continue
                s = tuple(sorted(rest + (m,)))
                value = sign * _sorted_sign(m, rest) * c
                for t in range(n):
                    add(target_space.index(t, out), source.index(t, s), value)

    entries = {key: v for key, v in entries.items() if v}
    return RatMatrix.from_sparse(target_space.dim, source.dim, entries)


@lru_cache(maxsize=64)
def differential_rank(g: StructureConstants, k: int) -> int:
    started = time.perf_counter()
    d = differential_matrix(g, k)
    r = rank(d)
    logger.debug(f"rank d{k} ({d.rows}x{d.cols}) = {r} in {time.perf_counter() - started:.3f}s")
    return r


@dataclass(frozen=True)
class CohomologyReport:
    c_dims: Tuple[int, int, int, int]
    d_ranks: Tuple[int, int, int]
    z_dims: Tuple[int, int, int]
    b_dims: Tuple[int, int]
    h_dims: Tuple[int, int, int]

    @property
    def h0(self) -> int:
        return self.h_dims[0]

    @property
    def h1(self) -> int:
        return self.h_dims[1]

    @property
    def h2(self) -> int:
        return self.h_dims[2]

    def as_dict(self) -> dict:
        return {
            "c_dims": list(self.c_dims),
            "d_ranks": list(self.d_ranks),
            "z_dims": list(self.z_dims),
            "b_dims": list(self.b_dims),
            "h_dims": list(self.h_dims),
        }


def h_dim(g: StructureConstants, k: int) -> int:
    if not 0 <= k <= 2:
        raise CochainDegreeError(f"cohomology degree {k} outside 0..2")
    z = CochainSpace(g, k).dim - differential_rank(g, k)
    b = differential_rank(g, k - 1) if k > 0 else 0
    return z - b


def is_algebraically_rigid(g: StructureConstants) -> bool:
    """dim H^2(g, g) = 0."""
    return h_dim(g, 2) == 0


@lru_cache(maxsize=128)
def full_report(g: StructureConstants) -> CohomologyReport:
    require_lie(g)
    c_dims = tuple(CochainSpace(g, k).dim for k in range(4))
    ranks = tuple(differential_rank(g, k) for k in range(3))
    z_dims = tuple(c_dims[k] - ranks[k] for k in range(3))
    b_dims = (ranks[0], ranks[1])
    h_dims = (z_dims[0], z_dims[1] - b_dims[0], z_dims[2] - b_dims[1])
    logger.info(f"cohomology of dimension {g.dim} algebra: H = {h_dims}")
    return CohomologyReport(c_dims, ranks, z_dims, b_dims, h_dims)
